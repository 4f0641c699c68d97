// Centered 1-D sample grid, sampled functions and the N x N phase lattice.
//
// Conventions (used by every module):
//   x_j = (j - N/2) * dx,  dx = L / N
//   p_k = (k - N/2) * dp,  dp = 1 / L          (so dx * dp = 1/N)
//   <f, g> = dx * sum_j f_j * conj(g_j)        (Riemann inner product)

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace shubinlab {

using Complex = std::complex<double>;
using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr Complex kI{0.0, 1.0};

struct Grid1D {
  int N = 128;      // number of samples, power of two
  double L = 16.0;  // window length, grid covers [-L/2, L/2)

  Grid1D() = default;
  Grid1D(int n, double length) : N(n), L(length) {
    if (N < 2 || (N & (N - 1)) != 0)
      throw std::invalid_argument("Grid1D: N must be a power of two, got " +
                                  std::to_string(N));
    if (!(L > 0.0)) throw std::invalid_argument("Grid1D: window length must be positive");
  }

  double dx() const { return L / N; }
  double dp() const { return 1.0 / L; }
  double x(int j) const { return (j - N / 2) * dx(); }
  double p(int k) const { return (k - N / 2) * dp(); }

  // Grid carrying the momentum samples p_k; reciprocal of the reciprocal is
  // the original grid.
  Grid1D reciprocal() const { return Grid1D(N, N * dp()); }

  bool operator==(const Grid1D& o) const { return N == o.N && L == o.L; }
  bool operator!=(const Grid1D& o) const { return !(*this == o); }
};

struct SampledFunction {
  Grid1D grid;
  VectorXcd values;

  SampledFunction() = default;
  SampledFunction(const Grid1D& g, VectorXcd v) : grid(g), values(std::move(v)) {
    if (values.size() != grid.N)
      throw std::invalid_argument("SampledFunction: value count does not match grid");
  }

  template <class F>
  static SampledFunction from_function(const Grid1D& g, F&& f) {
    VectorXcd v(g.N);
    for (int j = 0; j < g.N; ++j) v[j] = Complex(f(g.x(j)));
    return SampledFunction(g, std::move(v));
  }

  double norm() const { return std::sqrt(grid.dx()) * values.norm(); }
};

inline Complex inner(const SampledFunction& f, const SampledFunction& g) {
  if (f.grid != g.grid) throw std::invalid_argument("inner: grid mismatch");
  return f.grid.dx() * g.values.dot(f.values);  // Eigen dot conjugates its *this*
}

// N x N lattice z_{jk} = (x_j, p_k); row index = x, column index = p.
struct PhaseGrid {
  Grid1D xg;
  Grid1D pg;

  PhaseGrid() : PhaseGrid(Grid1D()) {}
  explicit PhaseGrid(const Grid1D& g) : xg(g), pg(g.reciprocal()) {}

  int N() const { return xg.N; }
  double cell_area() const { return xg.dx() * xg.dp(); }
  double x(int j) const { return xg.x(j); }
  double p(int k) const { return xg.p(k); }

  bool operator==(const PhaseGrid& o) const { return xg == o.xg; }
};

// Table of complex values on a PhaseGrid, table(j, k) = value at (x_j, p_k).
struct PhaseTable {
  PhaseGrid grid;
  MatrixXcd table;

  PhaseTable() = default;
  PhaseTable(const PhaseGrid& g, MatrixXcd t) : grid(g), table(std::move(t)) {
    if (table.rows() != grid.N() || table.cols() != grid.N())
      throw std::invalid_argument("PhaseTable: table shape does not match lattice");
  }

  template <class F>
  static PhaseTable from_function(const PhaseGrid& g, F&& f) {
    MatrixXcd t(g.N(), g.N());
    for (int j = 0; j < g.N(); ++j)
      for (int k = 0; k < g.N(); ++k) t(j, k) = Complex(f(g.x(j), g.p(k)));
    return PhaseTable(g, std::move(t));
  }
};

// Standard symplectic form, sigma(z, z') = p x' - p' x for z = (x, p).
inline double sigma(double x0, double p0, double x1, double p1) {
  return p0 * x1 - p1 * x0;
}

}  // namespace shubinlab
