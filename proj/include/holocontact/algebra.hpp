#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "holocontact/errors.hpp"
#include "holocontact/polynomial.hpp"

namespace holocontact {

using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;

/// Points of C^n handled by the analysis routines have n >= 2 and finite entries.
inline void check_point(const CVec& z) {
  if (z.size() < 2) {
    throw InputError("points need n >= 2 components");
  }
  if (!z.allFinite()) {
    throw InputError("point has non-finite components");
  }
}

/// Complex symmetric matrix. Stored canonically: the lower triangle is a copy
/// of the upper one, so entries(i, j) == entries(j, i) holds bit for bit.
class SymMatrix {
public:
  SymMatrix() = default;

  explicit SymMatrix(CMat entries, double sym_tol = 1e-12) : m_(std::move(entries)) {
    if (m_.rows() != m_.cols()) {
      throw DimensionMismatch("symmetric matrix must be square");
    }
    if (m_.rows() < 2) {
      throw InputError("symmetric matrix needs n >= 2");
    }
    if (!m_.allFinite()) {
      throw InputError("matrix has non-finite entries");
    }
    const double scale = std::max(1.0, m_.cwiseAbs().maxCoeff());
    for (Eigen::Index i = 0; i < m_.rows(); ++i) {
      for (Eigen::Index j = i + 1; j < m_.cols(); ++j) {
        if (std::abs(m_(i, j) - m_(j, i)) > sym_tol * scale) {
          throw InputError("matrix is not symmetric at (" + std::to_string(i) + ", " +
                           std::to_string(j) + ")");
        }
        m_(j, i) = m_(i, j);
      }
    }
  }

  static SymMatrix identity(Eigen::Index n) { return SymMatrix(CMat::Identity(n, n)); }

  static SymMatrix diagonal(const CVec& d) { return SymMatrix(CMat(d.asDiagonal())); }

  Eigen::Index n() const noexcept { return m_.rows(); }
  const CMat& entries() const noexcept { return m_; }
  Complex operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

private:
  CMat m_;
};

/// Hermitian matrix, canonicalized so that entries(i, j) == conj(entries(j, i)).
class HermMatrix {
public:
  HermMatrix() = default;

  explicit HermMatrix(const CMat& entries) : m_(0.5 * (entries + entries.adjoint())) {
    for (Eigen::Index i = 0; i < m_.rows(); ++i) {
      m_(i, i) = Complex{m_(i, i).real(), 0.0};
    }
  }

  Eigen::Index n() const noexcept { return m_.rows(); }
  const CMat& entries() const noexcept { return m_; }

  /// Ascending real eigenvalues.
  RVec eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<CMat> es(m_, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
      throw ConvergenceError("hermitian eigensolver did not converge");
    }
    return es.eigenvalues();
  }

private:
  CMat m_;
};

/// A = U diag(sigma) U^T, U unitary, sigma descending and non-negative.
struct TakagiFactors {
  CMat U;
  RVec sigma;
};

struct AlgebraTolerances {
  /// Matrices whose reciprocal condition estimate falls below this are singular.
  double singular_rcond = 1e-12;
};

inline void require_invertible(const SymMatrix& A, const AlgebraTolerances& tol = {}) {
  Eigen::PartialPivLU<CMat> lu(A.entries());
  const double det = std::abs(lu.determinant());
  const double rc = lu.rcond();
  if (!(det > 0.0) || !(rc > tol.singular_rcond)) {
    throw SingularMatrixError("matrix is singular (|det| = " + std::to_string(det) +
                              ", rcond estimate = " + std::to_string(rc) + ")");
  }
}

/// B = A^{-1} conj(A^{-1}), computed as (conj(A) A)^{-1}. Hermitian positive
/// definite for every invertible symmetric A.
inline HermMatrix gram_inverse(const SymMatrix& A, const AlgebraTolerances& tol = {}) {
  require_invertible(A, tol);
  const CMat G = A.entries().conjugate() * A.entries();
  const Eigen::Index n = A.n();
  const CMat B = G.partialPivLu().solve(CMat::Identity(n, n));
  return HermMatrix(B);
}

namespace detail {

inline void fix_column_phase(Eigen::Ref<CVec> col) {
  Eigen::Index arg_max = 0;
  double best = -1.0;
  for (Eigen::Index i = 0; i < col.size(); ++i) {
    const double a = std::abs(col(i));
    if (a > best * (1.0 + 1e-12)) {
      best = a;
      arg_max = i;
    }
  }
  const double arg = std::arg(col(arg_max));
  if (arg < 0.0 || arg >= std::numbers::pi) {
    col = -col;
  }
}

} // namespace detail

/// Takagi factorization of a complex symmetric matrix.
///
/// Writing A = X + iY and w = p + iq, the condition A w = sigma conj(w) is the
/// real symmetric eigenproblem
///
///   [ X  -Y ] [p]         [p]
///   [-Y  -X ] [q] = sigma [q]
///
/// whose spectrum is {+sigma_j, -sigma_j}. The eigenvectors of the n largest
/// eigenvalues give W with A W = conj(W) diag(sigma), hence U = conj(W). The
/// embedding handles repeated singular values without special cases: any
/// orthonormal basis of a degenerate positive eigenspace is a valid Takagi
/// basis, so no per-block phase repair is needed. Columns are then sign-fixed
/// so each column's largest-modulus entry has argument in [0, pi). Within a
/// degenerate block the choice of basis is unspecified.
inline TakagiFactors takagi(const SymMatrix& A) {
  const Eigen::Index n = A.n();
  const RMat X = A.entries().real();
  const RMat Y = A.entries().imag();
  RMat M(2 * n, 2 * n);
  M << X, -Y, -Y, -X;

  Eigen::SelfAdjointEigenSolver<RMat> es(M);
  if (es.info() != Eigen::Success) {
    throw ConvergenceError("Takagi factorization: symmetric eigensolver did not converge");
  }
  const RVec& lambda = es.eigenvalues();
  const RMat& V = es.eigenvectors();

  // Walk eigenpairs from the top; complex Gram-Schmidt discards the i*w
  // partners that show up when A is singular (kernel of M is then 2m-dimensional).
  CMat W(n, n);
  RVec sigma(n);
  Eigen::Index accepted = 0;
  for (Eigen::Index idx = 2 * n - 1; idx >= 0 && accepted < n; --idx) {
    CVec w(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      w(i) = Complex{V(i, idx), V(n + i, idx)};
    }
    for (Eigen::Index k = 0; k < accepted; ++k) {
      w -= W.col(k).dot(w) * W.col(k);
    }
    const double norm = w.norm();
    if (norm < 0.5) {
      continue;
    }
    W.col(accepted) = w / norm;
    sigma(accepted) = std::max(lambda(idx), 0.0);
    ++accepted;
  }
  if (accepted != n) {
    throw ConvergenceError("Takagi factorization: could not assemble a unitary basis");
  }

  TakagiFactors out{W.conjugate(), sigma};
  for (Eigen::Index j = 0; j < n; ++j) {
    detail::fix_column_phase(out.U.col(j));
  }
  return out;
}

/// U diag(sigma) U^T.
inline CMat takagi_reconstruct(const TakagiFactors& t) {
  return t.U * t.sigma.cast<Complex>().asDiagonal() * t.U.transpose();
}

/// (f_1(z), ..., f_n(z)); the gradient of the form is its componentwise conjugate.
inline CVec eval_form(const PolyOneForm& form, const CVec& z) { return form.eval(z); }

inline CMat jacobian_form(const PolyOneForm& form, const CVec& z) { return form.jacobian(z); }

inline PolyOneForm linear_form(const SymMatrix& A) { return linear_form(A.entries()); }

inline Polynomial quadratic_potential(const SymMatrix& A) {
  return quadratic_potential(A.entries());
}

} // namespace holocontact
