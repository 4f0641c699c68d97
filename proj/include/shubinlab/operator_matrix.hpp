// Dense operator on sampled functions. Entries are kernel samples:
//   (A f)_j = dx * sum_k A_{jk} f_k,
// so an integral operator with kernel K contributes A_{jk} = K(x_j, y_k) and
// the identity has kernel entries delta_{jk} / dx. app() folds the weight in,
// app = dx * kernel; products, adjoints and norms of app matrices compose like
// plain matrix algebra and app of a unitary operator is a unitary matrix.

#pragma once

#include "shubinlab/grid.hpp"

namespace shubinlab {

class OperatorMatrix {
 public:
  OperatorMatrix() = default;
  OperatorMatrix(const Grid1D& g, MatrixXcd kernel)
      : grid_(g), kernel_(std::move(kernel)) {
    if (kernel_.rows() != g.N || kernel_.cols() != g.N)
      throw std::invalid_argument("OperatorMatrix: kernel shape does not match grid");
  }

  static OperatorMatrix from_kernel(const Grid1D& g, MatrixXcd k) {
    return OperatorMatrix(g, std::move(k));
  }
  static OperatorMatrix from_app(const Grid1D& g, const MatrixXcd& m) {
    return OperatorMatrix(g, m / g.dx());
  }
  static OperatorMatrix identity(const Grid1D& g) {
    return from_app(g, MatrixXcd::Identity(g.N, g.N));
  }

  const Grid1D& grid() const { return grid_; }
  const MatrixXcd& kernel() const { return kernel_; }
  MatrixXcd app() const { return grid_.dx() * kernel_; }

  SampledFunction apply(const SampledFunction& f) const {
    if (f.grid != grid_) throw std::invalid_argument("OperatorMatrix::apply: grid mismatch");
    return SampledFunction(grid_, grid_.dx() * (kernel_ * f.values));
  }

  OperatorMatrix adjoint() const { return OperatorMatrix(grid_, kernel_.adjoint()); }

  OperatorMatrix operator*(const OperatorMatrix& rhs) const {
    if (grid_ != rhs.grid_) throw std::invalid_argument("OperatorMatrix: grid mismatch");
    return OperatorMatrix(grid_, grid_.dx() * (kernel_ * rhs.kernel_));
  }
  OperatorMatrix operator+(const OperatorMatrix& rhs) const {
    return OperatorMatrix(grid_, kernel_ + rhs.kernel_);
  }
  OperatorMatrix operator-(const OperatorMatrix& rhs) const {
    return OperatorMatrix(grid_, kernel_ - rhs.kernel_);
  }
  OperatorMatrix operator*(Complex c) const { return OperatorMatrix(grid_, c * kernel_); }

  OperatorMatrix inverse() const {
    return from_app(grid_, app().partialPivLu().inverse());
  }

  double frobenius() const { return app().norm(); }

 private:
  Grid1D grid_;
  MatrixXcd kernel_;
};

inline OperatorMatrix operator*(Complex c, const OperatorMatrix& a) { return a * c; }

// || A - B ||_F / || B ||_F on app matrices.
inline double rel_frobenius(const OperatorMatrix& a, const OperatorMatrix& b) {
  return (a.app() - b.app()).norm() / b.app().norm();
}

// || U^* U - I ||_F / sqrt(N).
inline double unitarity_defect(const OperatorMatrix& u) {
  MatrixXcd m = u.app();
  int n = static_cast<int>(m.rows());
  return (m.adjoint() * m - MatrixXcd::Identity(n, n)).norm() / std::sqrt(double(n));
}

// Least-squares scalar lambda minimizing || A - lambda B ||_F.
inline Complex fit_scalar(const OperatorMatrix& a, const OperatorMatrix& b) {
  MatrixXcd ma = a.app(), mb = b.app();
  Complex num = (mb.conjugate().array() * ma.array()).sum();
  double den = mb.squaredNorm();
  return num / den;
}

}  // namespace shubinlab
