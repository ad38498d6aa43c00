#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <Eigen/Dense>

#include "holocontact/algebra.hpp"
#include "holocontact/errors.hpp"
#include "holocontact/polynomial.hpp"
#include "holocontact/random.hpp"

namespace holocontact {

/// A solution of z = mu * conj(f(z)), i.e. a point where the leaf through z is
/// tangent to the sphere |w| = |z|.
struct ContactPoint {
  CVec z;
  Complex mu{0.0, 0.0};
  double radius = 0.0;
  double residual = 0.0;
  std::optional<Complex> leaf_value;
  std::optional<int> morse_index;
};

struct ContactOptions {
  double accept_tol = 1e-9;
  /// Duplicate threshold, relative to the sphere radius.
  double dedup_rel = 1e-6;
  int max_iter = 100;
  int max_halvings = 30;
  /// Corrector displacement bound during radial continuation, relative to radius.
  double max_correction_rel = 0.25;
  unsigned threads = 1;
};

/// conj(f_j(z)): hermitian-orthogonal to the kernel of the form.
inline CVec grad_omega(const PolyOneForm& form, const CVec& z) { return form.eval(z).conjugate(); }

namespace detail {

inline void require_gradient(const CVec& f, const CVec& z) {
  if (f.norm() <= 1e-14 * (1.0 + z.norm())) {
    throw SingularGradientError("gradient of the form vanishes at the evaluation point");
  }
}

/// Least-squares multiplier for values f = f(z) already computed.
inline Complex mu_from(const CVec& z, const CVec& f) {
  // <z, conj f> / |f|^2 with <a, b> = sum a_j conj(b_j)
  return (z.transpose() * f)(0) / f.squaredNorm();
}

} // namespace detail

/// mu = <R, grad Omega> / |grad Omega|^2, the multiplier minimizing
/// |z - mu * grad Omega(z)|.
inline Complex mu_of(const PolyOneForm& form, const CVec& z) {
  const CVec f = form.eval(z);
  detail::require_gradient(f, z);
  return detail::mu_from(z, f);
}

/// |z - mu(z) conj(f(z))| / |z|. Zero exactly on the variety of contacts.
inline double contact_residual(const PolyOneForm& form, const CVec& z) {
  const double r = z.norm();
  if (!(r > 0.0)) {
    throw InputError("contact residual is undefined at the origin");
  }
  const CVec f = form.eval(z);
  detail::require_gradient(f, z);
  const Complex mu = detail::mu_from(z, f);
  return (z - mu * f.conjugate()).norm() / r;
}

inline ContactPoint make_contact_point(const PolyOneForm& form, const CVec& z) {
  ContactPoint p;
  p.z = z;
  p.radius = z.norm();
  const CVec f = form.eval(z);
  detail::require_gradient(f, z);
  p.mu = detail::mu_from(z, f);
  p.residual = (z - p.mu * f.conjugate()).norm() / p.radius;
  return p;
}

namespace detail {

/// Real layout of the unknowns: (Re z_0, Im z_0, ..., Re z_{n-1}, Im z_{n-1}, Re mu, Im mu).
inline RVec pack(const CVec& z, Complex mu) {
  const Eigen::Index n = z.size();
  RVec x(2 * n + 2);
  for (Eigen::Index k = 0; k < n; ++k) {
    x(2 * k) = z(k).real();
    x(2 * k + 1) = z(k).imag();
  }
  x(2 * n) = mu.real();
  x(2 * n + 1) = mu.imag();
  return x;
}

inline void unpack(const RVec& x, CVec& z, Complex& mu) {
  const Eigen::Index n = (x.size() - 2) / 2;
  z.resize(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    z(k) = Complex{x(2 * k), x(2 * k + 1)};
  }
  mu = Complex{x(2 * n), x(2 * n + 1)};
}

/// Two extra real equations closing the contact system: (values, d/d(z) rows).
using ClosureFn = std::function<void(const CVec& z, Eigen::Ref<RVec> values, Eigen::Ref<RMat> rows)>;

/// Residual and real Jacobian of z - mu conj(f(z)) = 0 plus two closure rows.
inline void contact_system(const PolyOneForm& form, const CVec& z, Complex mu, const ClosureFn& closure,
                           RVec& F, RMat& J) {
  const Eigen::Index n = z.size();
  const CVec f = form.eval(z);
  const CMat Jf = form.jacobian(z);
  const CVec r = z - mu * f.conjugate();
  F.resize(2 * n + 2);
  J.setZero(2 * n + 2, 2 * n + 2);
  for (Eigen::Index j = 0; j < n; ++j) {
    F(2 * j) = r(j).real();
    F(2 * j + 1) = r(j).imag();
  }
  // d r = dz - dmu conj(f) - mu conj(Jf dz)
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const Complex a = mu * std::conj(Jf(j, k));
      const Complex dx = (j == k ? Complex{1.0, 0.0} : Complex{0.0, 0.0}) - a;
      const Complex dy = (j == k ? Complex{0.0, 1.0} : Complex{0.0, 0.0}) + Complex{0.0, 1.0} * a;
      J(2 * j, 2 * k) = dx.real();
      J(2 * j + 1, 2 * k) = dx.imag();
      J(2 * j, 2 * k + 1) = dy.real();
      J(2 * j + 1, 2 * k + 1) = dy.imag();
    }
  }
  for (Eigen::Index j = 0; j < n; ++j) {
    const Complex g = -std::conj(f(j));
    const Complex gi = Complex{0.0, 1.0} * g;
    J(2 * j, 2 * n) = g.real();
    J(2 * j + 1, 2 * n) = g.imag();
    J(2 * j, 2 * n + 1) = gi.real();
    J(2 * j + 1, 2 * n + 1) = gi.imag();
  }
  closure(z, F.segment(2 * n, 2), J.block(2 * n, 0, 2, 2 * n));
}

struct NewtonOutcome {
  bool converged = false;
  CVec z;
  Complex mu;
  int iterations = 0;
};

/// Damped Newton on the square contact system. Step halving (up to
/// max_halvings) enforces decrease of |F|; columns are solved by
/// column-pivoted QR so rank-deficient (non-Morse) systems still make progress.
inline NewtonOutcome newton_contact(const PolyOneForm& form, CVec z, Complex mu, const ClosureFn& closure,
                                    double abs_tol, const ContactOptions& opt) {
  NewtonOutcome out;
  RVec x = pack(z, mu);
  RVec F;
  RMat J;
  try {
    contact_system(form, z, mu, closure, F, J);
    for (int it = 0; it < opt.max_iter; ++it) {
      out.iterations = it;
      const double normF = F.norm();
      if (!std::isfinite(normF)) {
        return out;
      }
      if (normF <= abs_tol) {
        out.converged = true;
        break;
      }
      const RVec dx = J.colPivHouseholderQr().solve(-F);
      if (!dx.allFinite()) {
        return out;
      }
      double t = 1.0;
      bool accepted = false;
      RVec x_try;
      RVec F_try;
      RMat J_try;
      for (int h = 0; h <= opt.max_halvings; ++h) {
        x_try = x + t * dx;
        unpack(x_try, z, mu);
        contact_system(form, z, mu, closure, F_try, J_try);
        const double nt = F_try.norm();
        if (std::isfinite(nt) && (nt < (1.0 - 1e-4 * t) * normF || nt <= abs_tol)) {
          accepted = true;
          break;
        }
        t *= 0.5;
      }
      if (!accepted) {
        // Stagnation at rounding level counts as convergence; anything else fails.
        out.converged = normF <= 1e3 * abs_tol;
        break;
      }
      x = x_try;
      F = F_try;
      J = J_try;
      if ((t * dx).norm() <= 1e-15 * (1.0 + x.norm())) {
        out.converged = F.norm() <= 1e3 * abs_tol;
        break;
      }
    }
    if (!out.converged && F.norm() <= abs_tol) {
      out.converged = true;
    }
  } catch (const SingularGradientError&) {
    return out;
  }
  unpack(x, out.z, out.mu);
  return out;
}

/// |z|^2 = r^2 and Im <z, anchor> = 0, both scaled to be O(r).
inline ClosureFn sphere_closure(double r, const CVec& anchor) {
  const CVec a = anchor / anchor.norm();
  return [r, a](const CVec& z, Eigen::Ref<RVec> v, Eigen::Ref<RMat> rows) {
    const Eigen::Index n = z.size();
    v(0) = (z.squaredNorm() - r * r) / (2.0 * r);
    // Im sum z_j conj(a_j)
    v(1) = (z.transpose() * a.conjugate())(0).imag();
    for (Eigen::Index k = 0; k < n; ++k) {
      rows(0, 2 * k) = z(k).real() / r;
      rows(0, 2 * k + 1) = z(k).imag() / r;
      const Complex ca = std::conj(a(k));
      rows(1, 2 * k) = ca.imag();
      rows(1, 2 * k + 1) = ca.real();
    }
  };
}

/// Phase-aligned distance min_theta |p - e^{i theta} q|.
inline double phase_distance(const CVec& p, const CVec& q) {
  const double d2 = p.squaredNorm() + q.squaredNorm() - 2.0 * std::abs(q.dot(p));
  return std::sqrt(std::max(0.0, d2));
}

/// Rotate z by a unit phase so its first largest-modulus component is real positive.
inline CVec canonical_phase(const CVec& z) {
  const double m = z.cwiseAbs().maxCoeff();
  for (Eigen::Index k = 0; k < z.size(); ++k) {
    if (std::abs(z(k)) >= m * (1.0 - 1e-9)) {
      return z * (std::conj(z(k)) / std::abs(z(k)));
    }
  }
  return z;
}

inline bool lex_less(const CVec& a, const CVec& b) {
  for (Eigen::Index k = 0; k < a.size(); ++k) {
    if (a(k).real() != b(k).real()) {
      return a(k).real() < b(k).real();
    }
    if (a(k).imag() != b(k).imag()) {
      return a(k).imag() < b(k).imag();
    }
  }
  return false;
}

} // namespace detail

struct SolveReport {
  std::vector<ContactPoint> points;
  int seeds_tried = 0;
  int seeds_converged = 0;
};

/// Contact points on the sphere |z| = r found by Newton from n_seeds uniform
/// random starts. Each seed solves the real system
///   z - mu conj(f(z)) = 0,  |z|^2 = r^2,  Im <z, seed> = 0
/// in (z, mu). Converged points are projected to the sphere, re-validated with
/// the least-squares residual, and merged modulo phase. For homogeneous forms
/// every reported point is phase-normalized (contacts are closed under the
/// complex radial flow, so the whole phase orbit is in the variety).
inline SolveReport solve_on_sphere(const PolyOneForm& form, double r, int n_seeds, std::uint64_t rng_seed,
                                   double tol, const ContactOptions& opt = {}) {
  if (!(r > 0.0)) {
    throw InputError("sphere radius must be positive");
  }
  if (n_seeds < 1) {
    throw InputError("need at least one seed");
  }
  if (!(tol > 0.0)) {
    throw InputError("tolerance must be positive");
  }
  const int n = form.n();
  const bool homogeneous = form.homogeneous_degree().has_value();

  // Two Newton starts per seed: mu from the least-squares fit z ~ mu conj(f),
  // and mu = 1/nu from the dual fit conj(f) ~ nu z. The first favours contacts
  // with small |mu|, the second reaches the large-|mu| ones (for linear forms,
  // the lines with the smallest Takagi values).
  std::vector<std::vector<ContactPoint>> slots(static_cast<std::size_t>(n_seeds));
  auto run_seed = [&](int i) {
    const CVec z0 = sphere_point(rng_seed, static_cast<std::uint64_t>(i), n, r);
    const CVec f0 = form.eval(z0);
    if (f0.norm() <= 1e-14 * (1.0 + r)) {
      return;
    }
    std::vector<Complex> starts{detail::mu_from(z0, f0)};
    const Complex zf = (z0.transpose() * f0)(0);
    if (std::abs(zf) > 1e-12 * r * f0.norm()) {
      starts.push_back(z0.squaredNorm() / zf);
    }
    for (const Complex mu0 : starts) {
      const auto outcome = detail::newton_contact(form, z0, mu0, detail::sphere_closure(r, z0), 1e-14 * r, opt);
      if (!outcome.converged || !outcome.z.allFinite() || !(outcome.z.norm() > 0.0)) {
        continue;
      }
      CVec z = outcome.z * (r / outcome.z.norm());
      if (homogeneous) {
        z = detail::canonical_phase(z);
      }
      try {
        ContactPoint p = make_contact_point(form, z);
        if (p.residual <= tol && std::abs(p.radius - r) <= 1e-10 * r) {
          slots[static_cast<std::size_t>(i)].push_back(std::move(p));
        }
      } catch (const SingularGradientError&) {
      }
    }
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(opt.threads, static_cast<unsigned>(n_seeds)));
  if (threads == 1) {
    for (int i = 0; i < n_seeds; ++i) {
      run_seed(i);
    }
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (int i = static_cast<int>(t); i < n_seeds; i += static_cast<int>(threads)) {
          run_seed(i);
        }
      });
    }
    for (auto& th : pool) {
      th.join();
    }
  }

  SolveReport report;
  report.seeds_tried = n_seeds;
  std::vector<ContactPoint> candidates;
  for (auto& s : slots) {
    report.seeds_converged += s.empty() ? 0 : 1;
    for (auto& p : s) {
      candidates.push_back(std::move(p));
    }
  }

  // Sorting first makes the greedy merge independent of seed order.
  std::sort(candidates.begin(), candidates.end(),
            [](const ContactPoint& a, const ContactPoint& b) { return detail::lex_less(a.z, b.z); });
  const double dedup = opt.dedup_rel * r;
  for (auto& c : candidates) {
    const bool dup = std::any_of(report.points.begin(), report.points.end(), [&](const ContactPoint& p) {
      return detail::phase_distance(p.z, c.z) < dedup;
    });
    if (!dup) {
      report.points.push_back(std::move(c));
    }
  }
  return report;
}

/// A branch of the variety of contacts followed across radii.
struct ContactPath {
  std::vector<ContactPoint> points; // strictly increasing radius
  std::string form_id;
  bool truncated = false;
  std::string diagnostic;
};

inline std::string form_id(const PolyOneForm& form) {
  std::ostringstream os;
  os << std::hex << form.fingerprint();
  return os.str();
}

/// Follow the contact branch through `start` over a geometric radius grid of
/// `steps` points spanning [r_min, r_max]. Each step scales the previous point
/// radially (predictor) and re-solves the contact system at the new radius
/// with the predicted point as phase anchor (corrector). A corrector that fails
/// or moves farther than max_correction_rel * r ends that direction and sets
/// `truncated`.
inline ContactPath continue_radially(const PolyOneForm& form, const ContactPoint& start, double r_min,
                                     double r_max, int steps, const ContactOptions& opt = {}) {
  if (!(r_min > 0.0) || !(r_min < start.radius) || !(start.radius < r_max)) {
    throw InputError("continuation needs 0 < r_min < start radius < r_max");
  }
  if (steps < 2) {
    throw InputError("continuation needs at least two grid radii");
  }
  const double start_res = contact_residual(form, start.z);
  if (start_res > opt.accept_tol) {
    throw InputError("continuation start is not an accepted contact point (residual " +
                     std::to_string(start_res) + ")");
  }

  std::vector<double> grid(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) {
    grid[static_cast<std::size_t>(k)] =
        r_min * std::pow(r_max / r_min, static_cast<double>(k) / static_cast<double>(steps - 1));
  }
  grid.front() = r_min;
  grid.back() = r_max;

  ContactPath path;
  path.form_id = form_id(form);

  auto march = [&](const std::vector<double>& radii, std::vector<ContactPoint>& out) {
    CVec z = start.z;
    double r_prev = start.radius;
    for (double r : radii) {
      const CVec zp = z * (r / r_prev);
      const CVec fp = form.eval(zp);
      bool ok = fp.norm() > 1e-14 * (1.0 + r);
      CVec zc;
      if (ok) {
        const auto outcome = detail::newton_contact(form, zp, detail::mu_from(zp, fp),
                                                    detail::sphere_closure(r, zp), 1e-14 * r, opt);
        ok = outcome.converged && outcome.z.allFinite();
        if (ok) {
          zc = outcome.z * (r / outcome.z.norm());
          ok = (zc - zp).norm() <= opt.max_correction_rel * r;
        }
      }
      if (ok) {
        ContactPoint p = make_contact_point(form, zc);
        ok = p.residual <= opt.accept_tol;
        if (ok) {
          out.push_back(std::move(p));
          z = zc;
          r_prev = r;
          continue;
        }
      }
      path.truncated = true;
      std::ostringstream os;
      os << "corrector failed at radius " << r;
      path.diagnostic += (path.diagnostic.empty() ? "" : "; ") + os.str();
      return;
    }
  };

  const double eps_r = 1e-12 * start.radius;
  std::vector<double> down;
  std::vector<double> up;
  for (double r : grid) {
    if (r < start.radius - eps_r) {
      down.push_back(r);
    } else if (r > start.radius + eps_r) {
      up.push_back(r);
    }
  }
  std::reverse(down.begin(), down.end());

  std::vector<ContactPoint> inner;
  std::vector<ContactPoint> outer;
  march(down, inner);
  march(up, outer);

  std::reverse(inner.begin(), inner.end());
  path.points = std::move(inner);
  path.points.push_back(make_contact_point(form, start.z));
  for (auto& p : outer) {
    path.points.push_back(std::move(p));
  }
  return path;
}

/// For a form homogeneous of degree k, a contact point p stays a contact
/// point along the complex radial orbit p e^T. Checks the residual at each
/// sampled T.
inline bool radial_invariance_check(const PolyOneForm& form, const ContactPoint& p,
                                    const std::vector<Complex>& T_samples, double tol) {
  if (!form.homogeneous_degree()) {
    throw NonHomogeneousForm("radial invariance requires a homogeneous form");
  }
  if (contact_residual(form, p.z) > tol) {
    throw InputError("radial invariance check needs an accepted contact point");
  }
  return std::all_of(T_samples.begin(), T_samples.end(), [&](Complex T) {
    return contact_residual(form, CVec(p.z * std::exp(T))) <= tol;
  });
}

} // namespace holocontact
