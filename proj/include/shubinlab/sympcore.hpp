// Real symplectic linear algebra: membership tests, the symplectic Cayley
// transform M(S) = (1/2) J (S + I)(S - I)^{-1} with its identities, the named
// generator matrices, and seeded sampling of Sp_(0) elements.
//
// Block convention everywhere: z = (x, p), J = [[0, I], [-I, 0]],
// sigma(z, z') = p x' - p' x = (J z) . z'.

#pragma once

#include <Eigen/Dense>
#include <random>
#include <stdexcept>
#include <string>
#include <unsupported/Eigen/MatrixFunctions>

#include "shubinlab/grid.hpp"

namespace shubinlab {

using Eigen::MatrixXd;

inline MatrixXd symplectic_J(int n) {
  MatrixXd J = MatrixXd::Zero(2 * n, 2 * n);
  J.topRightCorner(n, n) = MatrixXd::Identity(n, n);
  J.bottomLeftCorner(n, n) = -MatrixXd::Identity(n, n);
  return J;
}

inline bool is_symplectic(const MatrixXd& S, double tol = 1e-12) {
  if (S.rows() != S.cols()) throw std::invalid_argument("is_symplectic: matrix not square");
  if (S.rows() % 2 != 0)
    throw std::invalid_argument("is_symplectic: odd dimension " + std::to_string(S.rows()));
  int n = static_cast<int>(S.rows()) / 2;
  MatrixXd J = symplectic_J(n);
  return (S.transpose() * J * S - J).cwiseAbs().maxCoeff() <= tol;
}

// Validated member of Sp(2n, R).
class SympMatrix {
 public:
  explicit SympMatrix(MatrixXd S, double tol = 1e-12) : S_(std::move(S)) {
    if (!is_symplectic(S_, tol))
      throw std::invalid_argument("SympMatrix: S^T J S != J beyond tolerance");
    if (std::abs(S_.determinant() - 1.0) > 1e-10)
      throw std::invalid_argument("SympMatrix: det S != 1");
  }

  int n() const { return static_cast<int>(S_.rows()) / 2; }
  const MatrixXd& m() const { return S_; }
  SympMatrix inverse() const { return SympMatrix(S_.inverse()); }
  SympMatrix operator*(const SympMatrix& o) const { return SympMatrix(S_ * o.S_); }

  double det_S_minus_I() const {
    return (S_ - MatrixXd::Identity(S_.rows(), S_.cols())).determinant();
  }
  bool in_sp0(double tol = 1e-10) const { return std::abs(det_S_minus_I()) > tol; }

 private:
  MatrixXd S_;
};

// Symmetric matrix produced by (and consumed by) the Cayley maps.
struct CayleyMatrix {
  MatrixXd entries;

  explicit CayleyMatrix(MatrixXd m) : entries(std::move(m)) {
    if ((entries - entries.transpose()).cwiseAbs().maxCoeff() > 1e-12)
      throw std::invalid_argument("CayleyMatrix: matrix not symmetric");
  }
};

inline CayleyMatrix cayley(const SympMatrix& S) {
  const MatrixXd& m = S.m();
  MatrixXd I = MatrixXd::Identity(m.rows(), m.cols());
  double d = (m - I).determinant();
  if (std::abs(d) <= 1e-10)
    throw std::domain_error("cayley: det(S - I) = " + std::to_string(d) +
                            ", S outside Sp_(0)");
  MatrixXd M = 0.5 * symplectic_J(S.n()) * (m + I) * (m - I).inverse();
  M = 0.5 * (M + M.transpose());  // scrub roundoff asymmetry
  return CayleyMatrix(M);
}

inline SympMatrix cayley_inverse(const CayleyMatrix& M) {
  int n = static_cast<int>(M.entries.rows()) / 2;
  MatrixXd halfJ = 0.5 * symplectic_J(n);
  double d = (M.entries - halfJ).determinant();
  if (std::abs(d) <= 1e-10)
    throw std::domain_error("cayley_inverse: det(M - J/2) = " + std::to_string(d) +
                            ", M outside Sym_(0)");
  return SympMatrix((M.entries - halfJ).inverse() * (M.entries + halfJ), 1e-9);
}

// M(S S') from M(S), M(S') without forming the product first:
//   M(S) + (S^T - I)^{-1} J (M(S) + M(S'))^{-1} J (S - I)^{-1}.
inline CayleyMatrix cayley_compose(const SympMatrix& S, const SympMatrix& S2) {
  const MatrixXd& a = S.m();
  MatrixXd I = MatrixXd::Identity(a.rows(), a.cols());
  MatrixXd J = symplectic_J(S.n());
  auto invert = [](const MatrixXd& m, const char* what) {
    if (std::abs(m.determinant()) <= 1e-10)
      throw std::domain_error(std::string("cayley_compose: singular factor ") + what);
    return MatrixXd(m.inverse());
  };
  if (!S.in_sp0() || !S2.in_sp0())
    throw std::domain_error("cayley_compose: argument outside Sp_(0)");
  if (!(S * S2).in_sp0())
    throw std::domain_error("cayley_compose: product outside Sp_(0)");
  MatrixXd M1 = cayley(S).entries, M2 = cayley(S2).entries;
  MatrixXd mid = invert(M1 + M2, "M(S) + M(S')");
  MatrixXd out = M1 + invert(a.transpose() - I, "S^T - I") * J * mid * J * invert(a - I, "S - I");
  out = 0.5 * (out + out.transpose());
  return CayleyMatrix(out);
}

enum class GeneratorKind { J, ChirpV, ScaleM };

// Projections on Sp(2n, R) of the metaplectic generators:
//   J, V_{-P} = [[I, 0], [P, I]] (P symmetric), M_L = [[L^{-1}, 0], [0, L^T]].
inline SympMatrix generator(GeneratorKind kind, const MatrixXd& param, int n) {
  MatrixXd I = MatrixXd::Identity(n, n);
  MatrixXd S = MatrixXd::Zero(2 * n, 2 * n);
  switch (kind) {
    case GeneratorKind::J:
      return SympMatrix(symplectic_J(n));
    case GeneratorKind::ChirpV: {
      if (param.rows() != n || param.cols() != n ||
          (param - param.transpose()).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("generator: chirp matrix P must be symmetric n x n");
      S.topLeftCorner(n, n) = I;
      S.bottomLeftCorner(n, n) = param;
      S.bottomRightCorner(n, n) = I;
      return SympMatrix(S);
    }
    case GeneratorKind::ScaleM: {
      if (param.rows() != n || param.cols() != n || std::abs(param.determinant()) < 1e-12)
        throw std::invalid_argument("generator: scaling matrix L must be invertible n x n");
      S.topLeftCorner(n, n) = param.inverse();
      S.bottomRightCorner(n, n) = param.transpose();
      return SympMatrix(S);
    }
  }
  throw std::logic_error("generator: unknown kind");
}

inline SympMatrix generator_J(int n = 1) { return generator(GeneratorKind::J, MatrixXd(), n); }
inline SympMatrix generator_V(double P) {
  return generator(GeneratorKind::ChirpV, MatrixXd::Constant(1, 1, P), 1);
}
inline SympMatrix generator_M(double L) {
  return generator(GeneratorKind::ScaleM, MatrixXd::Constant(1, 1, L), 1);
}

// Seeded draw from Sp_(0): S = exp(J A) with A symmetric, entries in [-1, 1];
// exp of the Lie algebra lands in Sp, rejection guards the Cayley domain.
inline SympMatrix random_sp0(std::mt19937_64& rng, int n = 1) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  MatrixXd J = symplectic_J(n);
  for (int attempt = 0; attempt < 256; ++attempt) {
    MatrixXd A(2 * n, 2 * n);
    for (int i = 0; i < 2 * n; ++i)
      for (int j = i; j < 2 * n; ++j) A(i, j) = A(j, i) = u(rng);
    MatrixXd S = (J * A).exp();
    S = S * 1.0;  // force evaluation
    double d = (S - MatrixXd::Identity(2 * n, 2 * n)).determinant();
    if (std::abs(d) >= 1e-6) return SympMatrix(S, 1e-9);
  }
  throw std::runtime_error("random_sp0: rejection sampling failed");
}

}  // namespace shubinlab
