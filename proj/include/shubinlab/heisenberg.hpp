// Heisenberg-Weyl operators and their tau-variants on the periodic grid:
//   (T_tau(z0) f)(x) = e^{2 pi i (p0 x - (1 - tau) p0 x0)} f(x - x0),
// with x0 snapped to the sample lattice and circular wraparound. The scalar
// link T_tau(z0) = e^{i pi (2 tau - 1) p0 x0} T(z0) holds exactly for any real
// p0. The exact commutation/composition phase laws additionally need p0 on
// the dp lattice (shifted modulations only wrap cleanly at lattice
// frequencies); law tests sample lattice-aligned points.
//
// Composition phase: measured on the grid (and provable from the definition),
//   T_tau(z0) T_tau(z1) = e^{2 pi i [(1-tau) p0 x1 - tau p1 x0]} T_tau(z0+z1).
// At tau = 1/2 this is the familiar e^{i pi sigma(z0, z1)}; for other tau the
// symmetric part (1-2tau)(p0 x1 + p1 x0)/2 survives. Both the tau = 1/2 phase
// and the general one are exposed so callers can compare them.

#pragma once

#include <cmath>

#include "shubinlab/grid.hpp"
#include "shubinlab/operator_matrix.hpp"

namespace shubinlab {

struct PhasePoint {
  double x = 0.0;
  double p = 0.0;
};

inline double sigma(const PhasePoint& a, const PhasePoint& b) {
  return sigma(a.x, a.p, b.x, b.p);
}

struct SnappedShift {
  int steps = 0;       // x0 = steps * dx after snapping
  double snap_error = 0.0;
};

inline SnappedShift snap_to_grid(double x0, const Grid1D& g) {
  double raw = x0 / g.dx();
  int steps = static_cast<int>(std::lround(raw));
  double err = std::abs(x0 - steps * g.dx());
  if (err > 0.5 * g.dx() * (1.0 + 1e-12))
    throw std::invalid_argument("heisenberg: shift x0 not alignable to the grid");
  return {steps, err};
}

inline bool lattice_aligned(const PhasePoint& z, const Grid1D& g, double tol = 1e-9) {
  double rx = z.x / g.dx(), rp = z.p / g.dp();
  return std::abs(rx - std::lround(rx)) < tol && std::abs(rp - std::lround(rp)) < tol;
}

// T_tau(z0) applied to a vector; the shift is circular, the phase uses the
// snapped x0 so the inverse and scalar laws close exactly.
inline SampledFunction apply_T_tau(double tau, const PhasePoint& z0, const SampledFunction& f) {
  const Grid1D& g = f.grid;
  SnappedShift s = snap_to_grid(z0.x, g);
  double x0 = s.steps * g.dx();
  VectorXcd out(g.N);
  for (int j = 0; j < g.N; ++j) {
    int src = ((j - s.steps) % g.N + g.N) % g.N;
    double phase = 2.0 * kPi * (z0.p * g.x(j) - (1.0 - tau) * z0.p * x0);
    out[j] = std::polar(1.0, phase) * f.values[src];
  }
  return SampledFunction(g, std::move(out));
}

inline SampledFunction apply_T(const PhasePoint& z0, const SampledFunction& f) {
  return apply_T_tau(0.5, z0, f);
}

// Dense realization; app() of this operator is exactly unitary.
inline OperatorMatrix heisenberg_matrix(double tau, const PhasePoint& z0, const Grid1D& g) {
  SnappedShift s = snap_to_grid(z0.x, g);
  double x0 = s.steps * g.dx();
  MatrixXcd m = MatrixXcd::Zero(g.N, g.N);
  for (int j = 0; j < g.N; ++j) {
    int src = ((j - s.steps) % g.N + g.N) % g.N;
    double phase = 2.0 * kPi * (z0.p * g.x(j) - (1.0 - tau) * z0.p * x0);
    m(j, src) = std::polar(1.0, phase);
  }
  return OperatorMatrix::from_app(g, m);
}

// e^{2 pi i sigma(z0, z1)}: the phase by which T_tau(z0) T_tau(z1) and
// T_tau(z1) T_tau(z0) differ, any tau.
inline Complex commutator_phase(const PhasePoint& z0, const PhasePoint& z1) {
  return std::polar(1.0, 2.0 * kPi * sigma(z0, z1));
}

// Phase in T_tau(z0) T_tau(z1) = phase * T_tau(z0 + z1).
inline Complex composition_phase(double tau, const PhasePoint& z0, const PhasePoint& z1) {
  return std::polar(1.0, 2.0 * kPi * ((1.0 - tau) * z0.p * z1.x - tau * z1.p * z0.x));
}

// The tau = 1/2 (Weyl) composition phase e^{i pi sigma(z0, z1)}.
inline Complex composition_phase_weyl(const PhasePoint& z0, const PhasePoint& z1) {
  return std::polar(1.0, kPi * sigma(z0, z1));
}

// Scalar in T_tau(z0) = scalar * T(z0).
inline Complex tau_phase_link(double tau, const PhasePoint& z0) {
  return std::polar(1.0, kPi * (2.0 * tau - 1.0) * z0.p * z0.x);
}

}  // namespace shubinlab
