#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "holocontact/algebra.hpp"
#include "holocontact/contact.hpp"
#include "holocontact/errors.hpp"
#include "holocontact/polynomial.hpp"
#include "holocontact/random.hpp"

namespace holocontact {

/// Omega = dF with the first integral F known explicitly. Leaves are the level
/// sets {F = c}.
struct FirstIntegral {
  Polynomial potential;
  PolyOneForm form;

  static FirstIntegral from_potential(Polynomial F) {
    PolyOneForm form = differential(F);
    return {std::move(F), std::move(form)};
  }

  /// Throws InputError when the form has no polynomial first integral.
  static FirstIntegral from_form(const PolyOneForm& form) {
    auto F = first_integral(form);
    if (!F) {
      throw InputError("form is not exact: leaf tracking needs a polynomial first integral");
    }
    return {std::move(*F), form};
  }

  Complex value(const CVec& z) const { return potential(z); }
};

/// The projected radial field at one point. w = z - mu conj(f) is the
/// hermitian projection of the radial field onto the leaf's tangent space;
/// its real form is half the gradient of |z|^2 restricted to the leaf.
struct FieldSample {
  CVec z;
  CVec radial;
  CVec grad_omega;
  Complex mu;
  CVec w;
  double t_norm = 0.0;
};

inline FieldSample sample_field(const PolyOneForm& form, const CVec& z) {
  if (!(z.norm() > 0.0)) {
    throw InputError("field sample at the origin");
  }
  FieldSample s;
  s.z = z;
  s.radial = z;
  const CVec f = form.eval(z);
  detail::require_gradient(f, z);
  s.grad_omega = f.conjugate();
  s.mu = detail::mu_from(z, f);
  s.w = z - s.mu * s.grad_omega;
  s.t_norm = s.w.norm();
  return s;
}

struct LeafOptions {
  /// |F(z) - c| allowed for on-leaf points, relative to (1 + |c|).
  double leaf_tol = 1e-10;
  /// t_norm threshold, relative to (1 + |z|), for accepting a point as critical.
  double crit_tol = 1e-6;
  double hessian_step = 1e-4;
  double eig_tol = 1e-7;
  int max_newton = 60;
  double h0 = 0.1;
  double h_max = 1.0;
  /// Largest |delta phi| accepted in one flow step, relative to (1 + phi).
  double dphi_rel_max = 0.05;
  /// Switch from the flow to a Newton polish once t_norm / (1 + |z|) drops below this.
  double polish_rel = 1e-5;
  double escape_radius = 1e6;
  ContactOptions contact{};
};

/// Local description of the leaf {F = c} around `base`. The pivot is the
/// coordinate eliminated by the implicit function theorem: z_pivot is solved
/// from the remaining coordinates. It is the index of the largest |dF/dz_j|.
class LeafChart {
public:
  static LeafChart at(FirstIntegral integral, const CVec& base, std::optional<Complex> c = std::nullopt,
                      const LeafOptions& opt = {}) {
    check_point(base);
    integral.form.check_dim(base);
    LeafChart chart;
    chart.c_ = c.value_or(integral.value(base));
    chart.integral_ = std::move(integral);
    chart.base_ = base;
    if (std::abs(chart.integral_.value(base) - chart.c_) > opt.leaf_tol * (1.0 + std::abs(chart.c_))) {
      throw InputError("chart base is not on the leaf F = c");
    }
    chart.choose_pivot(base);
    return chart;
  }

  const FirstIntegral& integral() const noexcept { return integral_; }
  const PolyOneForm& form() const noexcept { return integral_.form; }
  Complex c() const noexcept { return c_; }
  const CVec& base() const noexcept { return base_; }
  int pivot() const noexcept { return pivot_; }
  double pivot_scale() const noexcept { return pivot_scale_; }

  double leaf_error(const CVec& z) const { return std::abs(integral_.value(z) - c_); }

  bool on_leaf(const CVec& z, const LeafOptions& opt) const {
    return leaf_error(z) <= opt.leaf_tol * (1.0 + std::abs(c_));
  }

  /// Same leaf, re-based at z; re-chooses the pivot when |f_pivot(z)| has
  /// dropped below half its value at chart creation.
  LeafChart rechart(const CVec& z) const {
    LeafChart next = *this;
    next.base_ = z;
    const CVec f = form().eval(z);
    if (std::abs(f(pivot_)) < 0.5 * pivot_scale_) {
      next.choose_pivot(z);
    }
    return next;
  }

  /// Same leaf, chart centered at z with the pivot chosen fresh.
  LeafChart centered(const CVec& z) const {
    LeafChart next = *this;
    next.base_ = z;
    next.choose_pivot(z);
    return next;
  }

  /// Newton correction onto {F = c} along grad Omega:
  /// z <- z - (F(z) - c) conj(f) / |f|^2.
  std::optional<CVec> project(CVec z, const LeafOptions& opt) const {
    const double target = opt.leaf_tol * (1.0 + std::abs(c_));
    for (int it = 0; it < opt.max_newton; ++it) {
      const Complex e = integral_.value(z) - c_;
      if (std::abs(e) <= 1e-3 * target) {
        return z;
      }
      const CVec f = form().eval(z);
      const double f2 = f.squaredNorm();
      if (!(f2 > 0.0) || !std::isfinite(f2)) {
        return std::nullopt;
      }
      z -= (e / f2) * f.conjugate();
    }
    if (leaf_error(z) <= target) {
      return z;
    }
    return std::nullopt;
  }

  /// Solve F = c for the pivot coordinate only, starting from z.
  std::optional<CVec> solve_pivot(CVec z, const LeafOptions& opt) const {
    const auto& dk = form().coeffs()[static_cast<std::size_t>(pivot_)];
    double last = std::numeric_limits<double>::infinity();
    for (int it = 0; it < opt.max_newton; ++it) {
      const Complex e = integral_.value(z) - c_;
      const double ae = std::abs(e);
      // run until rounding stalls the residual so finite differences see clean values
      if (ae == 0.0 || (ae >= last && ae <= opt.leaf_tol * (1.0 + std::abs(c_)))) {
        return z;
      }
      last = std::min(last, ae);
      const Complex fk = dk(z);
      if (std::abs(fk) == 0.0) {
        return std::nullopt;
      }
      z(pivot_) -= e / fk;
    }
    if (on_leaf(z, opt)) {
      return z;
    }
    return std::nullopt;
  }

  /// Orthonormal frame (n x (n-1)) of the leaf's complex tangent space at p,
  /// built by Gram-Schmidt from the non-pivot coordinate directions projected
  /// onto {v : sum f_j(p) v_j = 0}.
  CMat tangent_frame(const CVec& p) const {
    const Eigen::Index n = p.size();
    const CVec g = form().eval(p).conjugate().normalized();
    CMat E(n, n - 1);
    Eigen::Index col = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j == pivot_) {
        continue;
      }
      CVec v = CVec::Unit(n, j);
      v -= g.dot(v) * g;
      for (Eigen::Index k = 0; k < col; ++k) {
        v -= E.col(k).dot(v) * E.col(k);
      }
      E.col(col++) = v.normalized();
    }
    return E;
  }

  /// Chart map: displace p by frame * u (u holds real/imag pairs), then put
  /// the point back on the leaf by moving the pivot coordinate.
  std::optional<CVec> lift(const CVec& p, const CMat& frame, const RVec& u, const LeafOptions& opt) const {
    CVec d = CVec::Zero(frame.cols());
    for (Eigen::Index m = 0; m < frame.cols(); ++m) {
      d(m) = Complex{u(2 * m), u(2 * m + 1)};
    }
    return solve_pivot(CVec(p + frame * d), opt);
  }

private:
  void choose_pivot(const CVec& z) {
    const CVec f = form().eval(z);
    Eigen::Index k = 0;
    f.cwiseAbs().maxCoeff(&k);
    if (std::abs(f(k)) <= 1e-12 * (1.0 + z.norm())) {
      throw SingularGradientError("leaf chart: gradient of the first integral vanishes");
    }
    pivot_ = static_cast<int>(k);
    pivot_scale_ = std::abs(f(k));
  }

  FirstIntegral integral_;
  Complex c_{0.0, 0.0};
  CVec base_;
  int pivot_ = 0;
  double pivot_scale_ = 0.0;
};

/// A random point of {F = c}: Gaussian start, scaled onto the level set when
/// F is homogeneous, then Newton-projected.
inline CVec random_leaf_point(const FirstIntegral& integral, Complex c, std::uint64_t key, std::uint64_t stream,
                              const LeafOptions& opt = {}) {
  const int n = integral.form.n();
  for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
    CVec z = gaussian_cvec(CounterRng(key, stream * 64 + attempt), n);
    const Complex Fz = integral.value(z);
    if (const auto d = integral.potential.homogeneous_degree(); d && std::abs(Fz) > 1e-12) {
      z *= std::exp(std::log(c / Fz) / static_cast<double>(*d));
    }
    const CVec f = integral.form.eval(z);
    if (f.norm() <= 1e-8 * (1.0 + z.norm())) {
      continue;
    }
    CVec cur = z;
    for (int it = 0; it < opt.max_newton; ++it) {
      const Complex e = integral.value(cur) - c;
      if (std::abs(e) <= 1e-3 * opt.leaf_tol * (1.0 + std::abs(c))) {
        return cur;
      }
      const CVec g = integral.form.eval(cur);
      cur -= (e / g.squaredNorm()) * g.conjugate();
      if (!cur.allFinite()) {
        break;
      }
    }
    if (cur.allFinite() && std::abs(integral.value(cur) - c) <= opt.leaf_tol * (1.0 + std::abs(c))) {
      return cur;
    }
  }
  throw ConvergenceError("could not place a random point on the requested leaf");
}

enum class FlowDirection { descend, ascend };

struct FlowResult {
  ContactPoint point;
  int steps = 0;    // flow iterations, accepted or rejected
  int accepted = 0;
  int rejected = 0;
  /// phi = |z|^2 after each accepted flow step, starting with phi(z0).
  std::vector<double> phi_trace;
  int polish_iterations = 0;
  int pivot = 0;
};

namespace detail {

/// Closure rows for the leaf equation F(z) = c, scaled by 1 / (1 + |c|).
inline ClosureFn leaf_closure(const FirstIntegral& integral, Complex c) {
  return [&integral, c](const CVec& z, Eigen::Ref<RVec> v, Eigen::Ref<RMat> rows) {
    const double s = 1.0 / (1.0 + std::abs(c));
    const Complex e = (integral.value(z) - c) * s;
    v(0) = e.real();
    v(1) = e.imag();
    const CVec f = integral.form.eval(z) * s;
    for (Eigen::Index k = 0; k < z.size(); ++k) {
      rows(0, 2 * k) = f(k).real();
      rows(0, 2 * k + 1) = -f(k).imag();
      rows(1, 2 * k) = f(k).imag();
      rows(1, 2 * k + 1) = f(k).real();
    }
  };
}

} // namespace detail

/// Newton solve for a critical point of |z|^2 on the leaf near z: unknowns
/// (z, mu), equations z = mu conj(f(z)) and F(z) = c. Converges to the nearby
/// critical point whatever its index.
inline std::optional<ContactPoint> refine_critical(const LeafChart& chart, const CVec& z, double tol,
                                                   const LeafOptions& opt = {}, int* iterations = nullptr) {
  const CVec f = chart.form().eval(z);
  if (f.norm() <= 1e-14 * (1.0 + z.norm())) {
    return std::nullopt;
  }
  const auto outcome = detail::newton_contact(chart.form(), z, detail::mu_from(z, f),
                                              detail::leaf_closure(chart.integral(), chart.c()),
                                              1e-14 * (1.0 + z.norm()), opt.contact);
  if (iterations) {
    *iterations = outcome.iterations;
  }
  if (!outcome.converged || !outcome.z.allFinite() || !chart.on_leaf(outcome.z, opt)) {
    return std::nullopt;
  }
  const FieldSample s = sample_field(chart.form(), outcome.z);
  if (s.t_norm > tol) {
    return std::nullopt;
  }
  ContactPoint p = make_contact_point(chart.form(), outcome.z);
  p.leaf_value = chart.c();
  return p;
}

/// Follow the projected radial field (the gradient of |z|^2 on the leaf, up to
/// a factor 2) down or up from z0 until t_norm <= tol.
///
/// Integrator: explicit midpoint with step control on |delta phi|, each step
/// pulled back onto the leaf along grad Omega. A step is accepted only if phi
/// moves strictly in the requested direction. Once t_norm is small the flow
/// hands over to a Newton polish (refine_critical) to reach tol; the polish is
/// not a flow step and is not recorded in phi_trace.
inline FlowResult flow_to_critical(const LeafChart& chart, const CVec& z0, FlowDirection direction, double tol,
                                   int max_steps, const LeafOptions& opt = {}) {
  check_point(z0);
  if (!chart.on_leaf(z0, opt)) {
    throw InputError("flow seed is not on the leaf F = c");
  }
  if (!(tol > 0.0)) {
    throw InputError("flow tolerance must be positive");
  }
  const double sign = direction == FlowDirection::descend ? -1.0 : 1.0;
  FlowResult res;
  LeafChart current = chart.rechart(z0);
  CVec z = z0;
  double phi = z.squaredNorm();
  res.phi_trace.push_back(phi);
  double h = opt.h0;
  double polish_rel = opt.polish_rel;

  auto finish = [&](ContactPoint p) {
    current = current.rechart(p.z);
    p.leaf_value = chart.c();
    res.point = std::move(p);
    res.pivot = current.pivot();
    return res;
  };

  for (;;) {
    const FieldSample s = sample_field(chart.form(), z);
    if (s.t_norm <= tol) {
      ContactPoint p = make_contact_point(chart.form(), z);
      return finish(std::move(p));
    }
    if (s.t_norm <= polish_rel * (1.0 + z.norm())) {
      int its = 0;
      auto p = refine_critical(chart, z, tol, opt, &its);
      res.polish_iterations += its;
      if (p && (p->z - z).norm() <= std::max(1e-3, 100.0 * s.t_norm) * (1.0 + z.norm())) {
        return finish(std::move(*p));
      }
      polish_rel *= 0.1;
    }
    if (res.steps >= max_steps) {
      throw FlowError("flow step limit exceeded (" + std::to_string(max_steps) + " steps, t_norm " +
                      std::to_string(s.t_norm) + ")");
    }
    ++res.steps;

    bool ok = false;
    CVec zn;
    double phin = phi;
    try {
      const CVec zh = z + (sign * 0.5 * h) * s.w;
      const FieldSample sh = sample_field(chart.form(), zh);
      if (auto proj = chart.project(CVec(z + (sign * h) * sh.w), opt)) {
        zn = *proj;
        phin = zn.squaredNorm();
        const double dphi = phin - phi;
        ok = (sign * dphi > 0.0) && std::abs(dphi) <= opt.dphi_rel_max * (1.0 + phi);
      }
    } catch (const SingularGradientError&) {
      ok = false;
    }

    if (ok) {
      z = zn;
      phi = phin;
      res.phi_trace.push_back(phi);
      ++res.accepted;
      h = std::min(1.5 * h, opt.h_max);
      current = current.rechart(z);
      if (std::sqrt(phi) > opt.escape_radius) {
        throw FlowError("flow left every bounded region (|z| > " + std::to_string(opt.escape_radius) + ")");
      }
    } else {
      ++res.rejected;
      h *= 0.5;
      if (h < 1e-14) {
        throw FlowError("flow step size underflow: leaf correction keeps failing");
      }
    }
  }
}

/// Hessian of |z|^2 / 2 restricted to the leaf at a critical point, in the real
/// coordinates of tangent_frame (real and imaginary parts per frame vector).
/// The half-distance normalization makes a point of contact line j of a
/// linear form have eigenvalues 1 +- sigma_i / sigma_j.
struct HessianReport {
  RMat matrix;
  RVec eigenvalues; // ascending
  int negative_count = 0;
  ContactPoint point;
  int pivot = 0;
};

inline HessianReport leaf_hessian(const LeafChart& chart, const CVec& p, const LeafOptions& opt = {}) {
  check_point(p);
  if (!chart.on_leaf(p, opt)) {
    throw InputError("Hessian point is not on the leaf F = c");
  }
  const FieldSample s = sample_field(chart.form(), p);
  if (s.t_norm > opt.crit_tol * (1.0 + p.norm())) {
    throw InputError("Hessian requested at a non-critical point (t_norm " + std::to_string(s.t_norm) + ")");
  }
  const LeafChart local = chart.centered(p);
  if (local.pivot_scale() <= 1e-8 * (1.0 + p.norm())) {
    throw NumericalError("pivot degeneracy: |dF/dz_k| too small for the implicit-function chart");
  }
  const CMat E = local.tangent_frame(p);
  const Eigen::Index m = 2 * E.cols();
  const double h = opt.hessian_step * (1.0 + p.norm());

  auto half_phi = [&](const RVec& u) {
    const auto z = local.lift(p, E, u, opt);
    if (!z) {
      throw NumericalError("leaf correction failed while sampling the Hessian");
    }
    return 0.5 * z->squaredNorm();
  };

  const double f0 = 0.5 * p.squaredNorm();
  RMat H(m, m);
  for (Eigen::Index a = 0; a < m; ++a) {
    RVec u = RVec::Zero(m);
    u(a) = h;
    const double fp = half_phi(u);
    u(a) = -h;
    const double fm = half_phi(u);
    H(a, a) = (fp - 2.0 * f0 + fm) / (h * h);
    for (Eigen::Index b = a + 1; b < m; ++b) {
      RVec v = RVec::Zero(m);
      v(a) = h;
      v(b) = h;
      const double fpp = half_phi(v);
      v(b) = -h;
      const double fpm = half_phi(v);
      v(a) = -h;
      const double fmm = half_phi(v);
      v(b) = h;
      const double fmp = half_phi(v);
      H(a, b) = H(b, a) = (fpp - fpm - fmp + fmm) / (4.0 * h * h);
    }
  }

  HessianReport rep;
  rep.matrix = 0.5 * (H + H.transpose());
  Eigen::SelfAdjointEigenSolver<RMat> es(rep.matrix, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw ConvergenceError("leaf Hessian eigensolver did not converge");
  }
  rep.eigenvalues = es.eigenvalues();
  rep.negative_count = static_cast<int>((rep.eigenvalues.array() < -opt.eig_tol).count());
  rep.point = make_contact_point(chart.form(), p);
  rep.point.leaf_value = chart.c();
  rep.point.morse_index = rep.negative_count;
  rep.pivot = local.pivot();
  return rep;
}

/// Closed-form leaf Hessian of |z|^2 / 2 for F = sum_i lambda_i z_i^2 at the
/// point w e_j, in coordinates (Re z_i, Im z_i) for i != j in index order.
/// With kappa_i = (lambda_i / lambda_j) conj(w)^2 / |w|^2 the block for z_i is
///   [ 1 - Re kappa_i    Im kappa_i    ]
///   [ Im kappa_i        1 + Re kappa_i]
/// with eigenvalues 1 +- |lambda_i / lambda_j|.
inline RMat closed_form_diagonal_hessian(const CVec& lambda, Eigen::Index j, Complex w) {
  const Eigen::Index n = lambda.size();
  RMat H = RMat::Zero(2 * (n - 1), 2 * (n - 1));
  const Complex phase = std::conj(w) * std::conj(w) / std::norm(w);
  Eigen::Index b = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (i == j) {
      continue;
    }
    const Complex kappa = lambda(i) / lambda(j) * phase;
    H(2 * b, 2 * b) = 1.0 - kappa.real();
    H(2 * b + 1, 2 * b + 1) = 1.0 + kappa.real();
    H(2 * b, 2 * b + 1) = H(2 * b + 1, 2 * b) = kappa.imag();
    ++b;
  }
  return H;
}

struct ScanPoint {
  CVec z;
  double ratio = 0.0; // t_norm / |z|
  std::uint64_t sample_index = 0;
};

struct ScanResult {
  double min_ratio = 0.0;
  std::vector<ScanPoint> worst; // ascending ratio
  int samples = 0;
  int skipped = 0; // samples where the form's gradient vanished
};

/// Transversality measure t_norm / |z| over n_samples uniform points of the
/// sphere |z| = r. Sample i depends only on (rng_seed, i), so a larger scan
/// extends a smaller one with the same seed.
inline ScanResult transversality_scan(const PolyOneForm& form, double r, int n_samples, std::uint64_t rng_seed,
                                      int worst_count = 5) {
  if (!(r > 0.0)) {
    throw InputError("scan radius must be positive");
  }
  if (n_samples < 1) {
    throw InputError("scan needs at least one sample");
  }
  ScanResult out;
  out.samples = n_samples;
  std::vector<ScanPoint> all;
  all.reserve(static_cast<std::size_t>(n_samples));
  for (int i = 0; i < n_samples; ++i) {
    const CVec z = sphere_point(rng_seed, static_cast<std::uint64_t>(i), form.n(), r);
    try {
      const FieldSample s = sample_field(form, z);
      all.push_back({z, s.t_norm / z.norm(), static_cast<std::uint64_t>(i)});
    } catch (const SingularGradientError&) {
      ++out.skipped;
    }
  }
  std::sort(all.begin(), all.end(), [](const ScanPoint& a, const ScanPoint& b) {
    return a.ratio < b.ratio || (a.ratio == b.ratio && a.sample_index < b.sample_index);
  });
  out.min_ratio = all.empty() ? std::numeric_limits<double>::quiet_NaN() : all.front().ratio;
  const auto keep = std::min<std::size_t>(all.size(), static_cast<std::size_t>(std::max(0, worst_count)));
  out.worst.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(keep));
  return out;
}

struct PersistenceReport {
  bool persisted = false;
  int index_before = 0;
  std::optional<int> index_after;
  std::optional<ContactPoint> found;
  double distance = 0.0;
  double radius_bound = 0.0;
  Complex c_new{0.0, 0.0};
  std::string note;
};

/// Does the critical point p of leaf c have a critical point of the same
/// Morse index on the nearby leaf c + dc, within 10 |dc|^(1/2) (1 + |p|)?
/// p is carried to the new leaf along grad Omega, then a minimum (index 0) is
/// recovered by descending flow and a saddle by Newton on the critical-point
/// equations.
inline PersistenceReport index_persistence(const LeafChart& chart, const ContactPoint& p, Complex dc,
                                           const LeafOptions& opt = {}) {
  if (!(std::abs(dc) <= 0.1 * std::abs(chart.c()))) {
    throw InputError("index persistence needs |dc| <= 0.1 |c|");
  }
  PersistenceReport rep;
  rep.index_before = p.morse_index ? *p.morse_index : leaf_hessian(chart, p.z, opt).negative_count;
  rep.c_new = chart.c() + dc;
  rep.radius_bound = 10.0 * std::sqrt(std::abs(dc)) * (1.0 + p.z.norm());

  // carry p to the new leaf
  CVec seed = p.z;
  bool placed = false;
  for (int it = 0; it < opt.max_newton; ++it) {
    const Complex e = chart.integral().value(seed) - rep.c_new;
    if (std::abs(e) <= 1e-3 * opt.leaf_tol * (1.0 + std::abs(rep.c_new))) {
      placed = true;
      break;
    }
    const CVec f = chart.form().eval(seed);
    seed -= (e / f.squaredNorm()) * f.conjugate();
  }
  if (!placed) {
    throw FlowError("could not carry the critical point to the nearby leaf");
  }
  const LeafChart next = LeafChart::at(chart.integral(), seed, rep.c_new, opt);
  const double tol = 1e-10 * (1.0 + seed.norm());

  ContactPoint q;
  if (rep.index_before == 0) {
    q = flow_to_critical(next, seed, FlowDirection::descend, tol, 20000, opt).point;
  } else {
    auto r = refine_critical(next, seed, tol, opt);
    if (!r) {
      throw FlowError("Newton search for the persisted saddle did not converge");
    }
    q = std::move(*r);
  }
  const HessianReport h = leaf_hessian(next, q.z, opt);
  q.morse_index = h.negative_count;
  rep.index_after = h.negative_count;
  rep.distance = (q.z - p.z).norm();
  rep.persisted = rep.index_after == rep.index_before && rep.distance <= rep.radius_bound;
  if (!rep.persisted) {
    rep.note = rep.index_after != rep.index_before ? "Morse index changed" : "critical point moved too far";
  }
  rep.found = std::move(q);
  return rep;
}

} // namespace holocontact
