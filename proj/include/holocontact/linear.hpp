#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "holocontact/algebra.hpp"
#include "holocontact/contact.hpp"
#include "holocontact/errors.hpp"

namespace holocontact {

// Linear foliations: Omega_A = sum a_ij z_i dz_j = dF with F = z^T A z / 2.
// Contact points satisfy A z = (1 / conj(mu)) conj(z). A Takagi vector w with
// A w = sigma conj(w) spans a complex line of contacts with |mu| = 1/sigma, and
// when the sigma are pairwise distinct these n lines are the whole variety.

struct LinearOptions {
  /// Relative gap below which two Takagi values count as equal.
  double gap_tol = 1e-9;
  double line_residual_tol = 1e-9;
  double eig_tol = 1e-7;
};

struct MorseVerdict {
  bool is_morse = false;
  RVec sigma;            // descending
  double min_gap = 0.0;  // smallest |sigma_i - sigma_j|, i != j
  double gap_tol = 0.0;
};

struct ContactLine {
  CVec direction; // unit, A w = sigma conj(w)
  double sigma = 0.0;
  double mu_modulus = 0.0;
  std::optional<int> morse_index;
  double residual = 0.0;
};

struct ContactLineSet {
  std::vector<ContactLine> lines;
  SymMatrix source;
  /// Takagi candidates rejected by residual validation; never silently kept.
  std::vector<std::string> diagnostics;
};

struct LinearAnalysis {
  MorseVerdict verdict;
  ContactLineSet lines;
};

inline MorseVerdict morse_verdict(const RVec& sigma, double gap_tol) {
  MorseVerdict v;
  v.sigma = sigma;
  v.gap_tol = gap_tol;
  double gap = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i + 1 < sigma.size(); ++i) {
    gap = std::min(gap, std::abs(sigma(i) - sigma(i + 1)));
  }
  v.min_gap = gap;
  v.is_morse = gap > gap_tol * sigma.maxCoeff();
  return v;
}

inline LinearAnalysis analyze(const SymMatrix& A, const LinearOptions& opt = {}) {
  require_invertible(A);
  const TakagiFactors t = takagi(A);
  LinearAnalysis out;
  out.verdict = morse_verdict(t.sigma, opt.gap_tol);
  out.lines.source = A;
  const PolyOneForm form = linear_form(A);
  for (Eigen::Index j = 0; j < A.n(); ++j) {
    ContactLine line;
    line.direction = t.U.col(j).conjugate();
    line.sigma = t.sigma(j);
    line.mu_modulus = 1.0 / t.sigma(j);
    line.residual = contact_residual(form, line.direction);
    if (line.residual > opt.line_residual_tol) {
      out.lines.diagnostics.push_back("Takagi direction " + std::to_string(j) + " rejected: residual " +
                                      std::to_string(line.residual));
      continue;
    }
    out.lines.lines.push_back(std::move(line));
  }
  return out;
}

/// Eigenvalues {1 - s_i/s_j, 1 + s_i/s_j : i != j} of the leaf Hessian of
/// |z|^2 / 2 at a point of line j, ascending.
inline std::vector<double> closed_form_line_spectrum(const RVec& sigma, Eigen::Index j) {
  std::vector<double> ev;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (i == j) {
      continue;
    }
    const double ratio = sigma(i) / sigma(j);
    ev.push_back(1.0 - ratio);
    ev.push_back(1.0 + ratio);
  }
  std::sort(ev.begin(), ev.end());
  return ev;
}

/// Morse index of every contact line: line j (descending sigma, 0-based) has
/// index j, cross-checked against the negative count of the closed-form spectrum.
inline ContactLineSet morse_indices(const SymMatrix& A, const LinearOptions& opt = {}) {
  LinearAnalysis a = analyze(A, opt);
  if (!a.verdict.is_morse) {
    throw NotMorseError("matrix is not of Morse type: repeated Takagi values");
  }
  for (std::size_t j = 0; j < a.lines.lines.size(); ++j) {
    auto& line = a.lines.lines[j];
    // sigma lookup by value keeps this right even if a line was rejected
    Eigen::Index pos = 0;
    for (Eigen::Index k = 0; k < a.verdict.sigma.size(); ++k) {
      if (a.verdict.sigma(k) == line.sigma) {
        pos = k;
        break;
      }
    }
    const auto spectrum = closed_form_line_spectrum(a.verdict.sigma, pos);
    const auto negatives = std::count_if(spectrum.begin(), spectrum.end(),
                                         [&](double e) { return e < -opt.eig_tol; });
    if (negatives != pos) {
      throw NumericalError("closed-form index " + std::to_string(negatives) +
                           " disagrees with sigma rank " + std::to_string(pos));
    }
    line.morse_index = static_cast<int>(pos);
  }
  return std::move(a.lines);
}

namespace detail {

/// Pool-adjacent-violators fit of a non-increasing sequence (least squares).
inline std::vector<double> isotonic_nonincreasing(const std::vector<double>& y) {
  struct Block {
    double sum;
    int count;
  };
  std::vector<Block> blocks;
  for (double v : y) {
    blocks.push_back({v, 1});
    while (blocks.size() > 1) {
      const Block& b = blocks.back();
      const Block& a = blocks[blocks.size() - 2];
      if (a.sum / a.count >= b.sum / b.count) {
        break;
      }
      const Block merged{a.sum + b.sum, a.count + b.count};
      blocks.pop_back();
      blocks.back() = merged;
    }
  }
  std::vector<double> out;
  out.reserve(y.size());
  for (const auto& b : blocks) {
    for (int i = 0; i < b.count; ++i) {
      out.push_back(b.sum / b.count);
    }
  }
  return out;
}

/// Closest sigma' to sigma with consecutive gaps >= gap.
inline RVec spread_sigma(const RVec& sigma, double gap) {
  std::vector<double> shifted(static_cast<std::size_t>(sigma.size()));
  for (Eigen::Index j = 0; j < sigma.size(); ++j) {
    shifted[static_cast<std::size_t>(j)] = sigma(j) + static_cast<double>(j) * gap;
  }
  const auto fit = isotonic_nonincreasing(shifted);
  RVec out(sigma.size());
  for (Eigen::Index j = 0; j < sigma.size(); ++j) {
    out(j) = fit[static_cast<std::size_t>(j)] - static_cast<double>(j) * gap;
  }
  return out;
}

/// Upward-only variant: keeps the smallest value, raises the rest as needed.
inline RVec raise_sigma(const RVec& sigma, double gap) {
  RVec out = sigma;
  for (Eigen::Index j = sigma.size() - 2; j >= 0; --j) {
    out(j) = std::max(sigma(j), out(j + 1) + gap);
  }
  return out;
}

} // namespace detail

/// Nearby Morse-type matrix: perturbs the Takagi values to pairwise gaps of at
/// least eps/(2n) (smaller if needed to stay within eps) and returns
/// A + U diag(sigma' - sigma) U^T. Morse inputs come back unchanged.
inline SymMatrix morseify(const SymMatrix& A, double eps, const LinearOptions& opt = {}) {
  if (!(eps > 0.0)) {
    throw InputError("morseify needs eps > 0");
  }
  require_invertible(A);
  const TakagiFactors t = takagi(A);
  if (morse_verdict(t.sigma, opt.gap_tol).is_morse) {
    return A;
  }
  const auto n = static_cast<double>(A.n());
  const double sigma_max = t.sigma.maxCoeff();
  const double budget = 0.95 * eps;

  auto attempt = [&](auto&& spread) -> std::optional<SymMatrix> {
    double gap = eps / (2.0 * n);
    for (int shrink = 0; shrink < 60; ++shrink, gap *= 0.5) {
      if (gap <= 2.0 * opt.gap_tol * sigma_max) {
        return std::nullopt;
      }
      const RVec target = spread(t.sigma, gap);
      const RVec delta = target - t.sigma;
      if (delta.norm() > budget) {
        continue;
      }
      const CMat D = t.U * delta.cast<Complex>().asDiagonal() * t.U.transpose();
      CMat M = A.entries() + 0.5 * (D + D.transpose());
      SymMatrix candidate(M, 1e-9);
      if ((candidate.entries() - A.entries()).norm() > eps) {
        continue;
      }
      if (morse_verdict(takagi(candidate).sigma, opt.gap_tol).is_morse) {
        return candidate;
      }
    }
    return std::nullopt;
  };

  if (auto m = attempt(detail::spread_sigma)) {
    return *m;
  }
  if (auto m = attempt(detail::raise_sigma)) {
    return *m;
  }
  throw InputError("eps is too small relative to the matrix scale to separate its Takagi values");
}

/// One unit-radius representative per contact line; each is a point where the
/// foliation fails to be transverse to the unit sphere.
inline std::vector<ContactPoint> unit_sphere_tangencies(const SymMatrix& A, const LinearOptions& opt = {}) {
  const LinearAnalysis a = analyze(A, opt);
  const PolyOneForm form = linear_form(A);
  std::optional<ContactLineSet> indexed;
  if (a.verdict.is_morse) {
    indexed = morse_indices(A, opt);
  }
  std::vector<ContactPoint> out;
  for (std::size_t j = 0; j < a.lines.lines.size(); ++j) {
    const CVec& w = a.lines.lines[j].direction;
    ContactPoint p = make_contact_point(form, w);
    p.leaf_value = 0.5 * (w.transpose() * A.entries() * w)(0);
    if (indexed) {
      p.morse_index = indexed->lines[j].morse_index;
    }
    out.push_back(std::move(p));
  }
  return out;
}

/// Distance from z to the complex line through the unit vector w.
inline double line_distance(const CVec& z, const CVec& w) { return (z - w.dot(z) * w).norm(); }

} // namespace holocontact
