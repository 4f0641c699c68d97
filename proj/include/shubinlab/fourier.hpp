// Discrete realization of Ff(p) = int e^{-2 pi i p x} f(x) dx on the centered
// grid, and the symplectic Fourier transform on the phase lattice.
//
// The DFT phases are reduced with integer arithmetic,
// p_k * x_j = (j - N/2)(k - N/2) / N mod 1, so the matrix pair below is an
// exact inverse pair up to roundoff and the lattice symplectic transform is
// exactly involutive.

#pragma once

#include "shubinlab/grid.hpp"

namespace shubinlab {

namespace detail {

inline Complex unit_phase(long num, long den) {
  long r = num % den;
  return std::polar(1.0, 2.0 * kPi * static_cast<double>(r) / static_cast<double>(den));
}

}  // namespace detail

// Forward matrix: (F f)_k = dx * sum_j e^{-2 pi i p_k x_j} f_j.
inline MatrixXcd dft_matrix(const Grid1D& g) {
  MatrixXcd D(g.N, g.N);
  for (int k = 0; k < g.N; ++k)
    for (int j = 0; j < g.N; ++j)
      D(k, j) = g.dx() * detail::unit_phase(-static_cast<long>(j - g.N / 2) * (k - g.N / 2), g.N);
  return D;
}

// Inverse matrix: (F^{-1} h)_j = dp * sum_k e^{+2 pi i x_j p_k} h_k.
inline MatrixXcd dft_inverse_matrix(const Grid1D& g) {
  MatrixXcd D(g.N, g.N);
  for (int j = 0; j < g.N; ++j)
    for (int k = 0; k < g.N; ++k)
      D(j, k) = g.dp() * detail::unit_phase(static_cast<long>(j - g.N / 2) * (k - g.N / 2), g.N);
  return D;
}

inline SampledFunction fourier(const SampledFunction& f) {
  return SampledFunction(f.grid.reciprocal(), dft_matrix(f.grid) * f.values);
}

inline SampledFunction inverse_fourier(const SampledFunction& h) {
  return SampledFunction(h.grid.reciprocal(), dft_inverse_matrix(h.grid.reciprocal()) * h.values);
}

// a_sigma(z) = int e^{-2 pi i sigma(z, z')} a(z') dz' as a lattice Riemann sum.
// Output x couples to input p' through e^{+2 pi i p' x} and output p to input
// x' through e^{-2 pi i p x'}; both are the exact matrices above, so applying
// the transform twice is the identity on the lattice.
inline PhaseTable symplectic_fourier(const PhaseTable& a) {
  const Grid1D& g = a.grid.xg;
  MatrixXcd fwd = dft_matrix(g);           // (k, j') with weight dx
  MatrixXcd inv = dft_inverse_matrix(g);   // (j, k') with weight dp
  // a_sigma(j, k) = sum_{j'} fwd(k, j') sum_{k'} inv(j, k') a(j', k')
  MatrixXcd out = inv * a.table.transpose() * fwd.transpose();
  return PhaseTable(a.grid, std::move(out));
}

}  // namespace shubinlab
