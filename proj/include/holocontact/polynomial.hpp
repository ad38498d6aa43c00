#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "holocontact/errors.hpp"

namespace holocontact {

using Complex = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

/// One term c * z^e of a sparse polynomial in n complex variables.
struct Monomial {
  Complex coeff;
  std::vector<int> exponents;
};

/// Sparse polynomial with exact integer exponents. Terms are kept canonical:
/// sorted by exponent vector, duplicates merged, zero coefficients pruned.
class Polynomial {
public:
  Polynomial() = default;

  Polynomial(int nvars, std::vector<Monomial> terms) : nvars_(nvars), terms_(std::move(terms)) {
    if (nvars_ < 1) {
      throw InputError("polynomial needs at least one variable");
    }
    for (const auto& t : terms_) {
      if (static_cast<int>(t.exponents.size()) != nvars_) {
        throw DimensionMismatch("monomial exponent length " + std::to_string(t.exponents.size()) +
                                " does not match " + std::to_string(nvars_) + " variables");
      }
      for (int e : t.exponents) {
        if (e < 0) {
          throw InputError("negative exponent in monomial");
        }
      }
      if (!std::isfinite(t.coeff.real()) || !std::isfinite(t.coeff.imag())) {
        throw InputError("non-finite polynomial coefficient");
      }
    }
    canonicalize();
  }

  static Polynomial zero(int nvars) { return Polynomial(nvars, {}); }

  int nvars() const noexcept { return nvars_; }
  const std::vector<Monomial>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  int total_degree() const noexcept {
    int d = 0;
    for (const auto& t : terms_) {
      d = std::max(d, degree_of(t));
    }
    return d;
  }

  /// Common total degree of all terms, if there is one.
  std::optional<int> homogeneous_degree() const noexcept {
    if (terms_.empty()) {
      return std::nullopt;
    }
    const int d = degree_of(terms_.front());
    for (const auto& t : terms_) {
      if (degree_of(t) != d) {
        return std::nullopt;
      }
    }
    return d;
  }

  Complex operator()(const CVec& z) const {
    check_dim(z);
    Complex acc{0.0, 0.0};
    for (const auto& t : terms_) {
      Complex m = t.coeff;
      for (int k = 0; k < nvars_; ++k) {
        if (t.exponents[k] > 0) {
          m *= ipow(z(k), t.exponents[k]);
        }
      }
      acc += m;
    }
    return acc;
  }

  Polynomial derivative(int k) const {
    std::vector<Monomial> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      const int e = t.exponents[k];
      if (e == 0) {
        continue;
      }
      Monomial m = t;
      m.coeff *= static_cast<double>(e);
      m.exponents[k] -= 1;
      out.push_back(std::move(m));
    }
    return Polynomial(nvars_, std::move(out));
  }

  Polynomial operator+(const Polynomial& other) const {
    if (other.nvars_ != nvars_) {
      throw DimensionMismatch("adding polynomials in different numbers of variables");
    }
    auto terms = terms_;
    terms.insert(terms.end(), other.terms_.begin(), other.terms_.end());
    return Polynomial(nvars_, std::move(terms));
  }

  Polynomial scaled(Complex s) const {
    auto terms = terms_;
    for (auto& t : terms) {
      t.coeff *= s;
    }
    return Polynomial(nvars_, std::move(terms));
  }

  void check_dim(const CVec& z) const {
    if (z.size() != nvars_) {
      throw DimensionMismatch("point has " + std::to_string(z.size()) + " components, polynomial has " +
                              std::to_string(nvars_) + " variables");
    }
  }

  static Complex ipow(Complex base, int e) {
    Complex r{1.0, 0.0};
    while (e > 0) {
      if (e & 1) {
        r *= base;
      }
      base *= base;
      e >>= 1;
    }
    return r;
  }

private:
  static int degree_of(const Monomial& m) noexcept {
    int d = 0;
    for (int e : m.exponents) {
      d += e;
    }
    return d;
  }

  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Monomial& a, const Monomial& b) { return a.exponents < b.exponents; });
    std::vector<Monomial> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!merged.empty() && merged.back().exponents == t.exponents) {
        merged.back().coeff += t.coeff;
      } else {
        merged.push_back(std::move(t));
      }
    }
    std::erase_if(merged, [](const Monomial& m) { return m.coeff == Complex{0.0, 0.0}; });
    terms_ = std::move(merged);
  }

  int nvars_ = 0;
  std::vector<Monomial> terms_;
};

/// Holomorphic one-form sum_j f_j(z) dz_j with polynomial coefficients.
class PolyOneForm {
public:
  PolyOneForm() = default;

  explicit PolyOneForm(std::vector<Polynomial> coeffs) : coeffs_(std::move(coeffs)) {
    const auto n = static_cast<int>(coeffs_.size());
    if (n < 2) {
      throw InputError("one-form needs n >= 2 coefficients");
    }
    for (const auto& p : coeffs_) {
      if (p.nvars() != n) {
        throw DimensionMismatch("coefficient polynomial has " + std::to_string(p.nvars()) +
                                " variables, expected " + std::to_string(n));
      }
    }
  }

  int n() const noexcept { return static_cast<int>(coeffs_.size()); }
  const std::vector<Polynomial>& coeffs() const noexcept { return coeffs_; }

  std::vector<int> degree_info() const {
    std::vector<int> d;
    d.reserve(coeffs_.size());
    for (const auto& p : coeffs_) {
      d.push_back(p.total_degree());
    }
    return d;
  }

  /// Degree k when every nonzero coefficient is homogeneous of the same degree.
  std::optional<int> homogeneous_degree() const noexcept {
    std::optional<int> k;
    for (const auto& p : coeffs_) {
      if (p.is_zero()) {
        continue;
      }
      const auto d = p.homogeneous_degree();
      if (!d || (k && *k != *d)) {
        return std::nullopt;
      }
      k = d;
    }
    return k;
  }

  /// (f_1(z), ..., f_n(z)).
  CVec eval(const CVec& z) const {
    check_dim(z);
    CVec out(n());
    for (int j = 0; j < n(); ++j) {
      out(j) = coeffs_[j](z);
    }
    return out;
  }

  /// Entry (j, k) is df_j/dz_k at z.
  CMat jacobian(const CVec& z) const {
    check_dim(z);
    CMat J = CMat::Zero(n(), n());
    for (int j = 0; j < n(); ++j) {
      for (const auto& t : coeffs_[j].terms()) {
        for (int k = 0; k < n(); ++k) {
          const int e = t.exponents[k];
          if (e == 0) {
            continue;
          }
          Complex m = t.coeff * static_cast<double>(e);
          for (int l = 0; l < n(); ++l) {
            const int el = (l == k) ? e - 1 : t.exponents[l];
            if (el > 0) {
              m *= Polynomial::ipow(z(l), el);
            }
          }
          J(j, k) += m;
        }
      }
    }
    return J;
  }

  void check_dim(const CVec& z) const {
    if (z.size() != n()) {
      throw DimensionMismatch("point has " + std::to_string(z.size()) + " components, form has n = " +
                              std::to_string(n()));
    }
  }

  /// Stable 64-bit FNV-1a digest of the canonical term list, used as a form id.
  std::uint64_t fingerprint() const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto eat = [&h](const void* data, std::size_t len) {
      const auto* p = static_cast<const unsigned char*>(data);
      for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
      }
    };
    for (const auto& p : coeffs_) {
      const std::uint64_t marker = p.terms().size();
      eat(&marker, sizeof marker);
      for (const auto& t : p.terms()) {
        const double re = t.coeff.real() + 0.0;
        const double im = t.coeff.imag() + 0.0;
        eat(&re, sizeof re);
        eat(&im, sizeof im);
        eat(t.exponents.data(), t.exponents.size() * sizeof(int));
      }
    }
    return h;
  }

private:
  std::vector<Polynomial> coeffs_;
};

/// The exact form dF of a polynomial F.
inline PolyOneForm differential(const Polynomial& potential) {
  std::vector<Polynomial> coeffs;
  coeffs.reserve(static_cast<std::size_t>(potential.nvars()));
  for (int k = 0; k < potential.nvars(); ++k) {
    coeffs.push_back(potential.derivative(k));
  }
  return PolyOneForm(std::move(coeffs));
}

/// Polynomial first integral F with dF = form and F(0) = 0, when the form is
/// exact. Uses the radial homotopy F(z) = integral_0^1 sum_j z_j f_j(tz) dt,
/// which maps c z^e in f_j to c z^(e + e_j) / (|e| + 1), then checks dF = form.
inline std::optional<Polynomial> first_integral(const PolyOneForm& form) {
  const int n = form.n();
  std::vector<Monomial> terms;
  for (int j = 0; j < n; ++j) {
    for (const auto& t : form.coeffs()[j].terms()) {
      int deg = 0;
      for (int e : t.exponents) {
        deg += e;
      }
      Monomial m = t;
      m.exponents[j] += 1;
      m.coeff /= static_cast<double>(deg + 1);
      terms.push_back(std::move(m));
    }
  }
  Polynomial F(n, std::move(terms));
  const PolyOneForm back = differential(F);
  for (int j = 0; j < n; ++j) {
    const auto& a = back.coeffs()[j].terms();
    const auto& b = form.coeffs()[j].terms();
    if (a.size() != b.size()) {
      return std::nullopt;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].exponents != b[i].exponents ||
          std::abs(a[i].coeff - b[i].coeff) > 1e-12 * (1.0 + std::abs(b[i].coeff))) {
        return std::nullopt;
      }
    }
  }
  return F;
}

// ---------------------------------------------------------------------------
// Fixture builders

/// f = sum_j z_j^k.
inline Polynomial power_sum(int n, int k) {
  std::vector<Monomial> terms;
  for (int j = 0; j < n; ++j) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(j)] = k;
    terms.push_back({Complex{1.0, 0.0}, std::move(e)});
  }
  return Polynomial(n, std::move(terms));
}

/// f = (1/2) z^T A z for a (not necessarily canonical) square matrix A.
inline Polynomial quadratic_potential(const CMat& A) {
  const auto n = static_cast<int>(A.rows());
  std::vector<Monomial> terms;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (A(i, j) == Complex{0.0, 0.0}) {
        continue;
      }
      std::vector<int> e(static_cast<std::size_t>(n), 0);
      e[static_cast<std::size_t>(i)] += 1;
      e[static_cast<std::size_t>(j)] += 1;
      terms.push_back({0.5 * A(i, j), std::move(e)});
    }
  }
  return Polynomial(n, std::move(terms));
}

/// The form sum_{i,j} a_ij z_i dz_j, i.e. f_j(z) = (A^T z)_j.
inline PolyOneForm linear_form(const CMat& A) {
  const auto n = static_cast<int>(A.rows());
  std::vector<Polynomial> coeffs;
  for (int j = 0; j < n; ++j) {
    std::vector<Monomial> terms;
    for (int i = 0; i < n; ++i) {
      std::vector<int> e(static_cast<std::size_t>(n), 0);
      e[static_cast<std::size_t>(i)] = 1;
      terms.push_back({A(i, j), std::move(e)});
    }
    coeffs.emplace_back(n, std::move(terms));
  }
  return PolyOneForm(std::move(coeffs));
}

/// sum_{j=1}^{m} (z_{2j} dz_{2j-1} - z_{2j-1} dz_{2j}) on C^{2m}. Its kernel is
/// transverse to every sphere about the origin.
inline PolyOneForm symplectic_form(int m) {
  const int n = 2 * m;
  std::vector<Polynomial> coeffs;
  for (int j = 0; j < m; ++j) {
    std::vector<int> even(static_cast<std::size_t>(n), 0);
    std::vector<int> odd(static_cast<std::size_t>(n), 0);
    odd[static_cast<std::size_t>(2 * j + 1)] = 1;
    even[static_cast<std::size_t>(2 * j)] = 1;
    coeffs.emplace_back(n, std::vector<Monomial>{{Complex{1.0, 0.0}, odd}});
    coeffs.emplace_back(n, std::vector<Monomial>{{Complex{-1.0, 0.0}, even}});
  }
  return PolyOneForm(std::move(coeffs));
}

} // namespace holocontact
