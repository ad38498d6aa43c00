#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "holocontact/errors.hpp"

namespace holocontact {

/// Euler characteristic of S^m; the empty sphere S^{-1} has chi = 0.
constexpr int euler_sphere(int m) {
  if (m < -1) {
    throw InputError("sphere dimension must be >= -1");
  }
  if (m == -1) {
    return 0;
  }
  return m % 2 == 0 ? 2 : 0;
}

/// sum_i (-1)^i n_i, where n_i counts zeros of Morse index i.
inline long long pugh_sum(const std::vector<long long>& counts) {
  long long s = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] < 0) {
      throw InputError("zero counts must be non-negative");
    }
    s += (i % 2 == 0) ? counts[i] : -counts[i];
  }
  return s;
}

/// I = 1 + (i - e) / 2 for a disc field with i interior and e exterior
/// boundary tangencies.
constexpr int poincare_index(int interior, int exterior) {
  if (interior < 0 || exterior < 0) {
    throw InputError("tangency counts must be non-negative");
  }
  if ((interior - exterior) % 2 != 0) {
    throw ParityError("i - e must be even");
  }
  return 1 + (interior - exterior) / 2;
}

struct IdentityCheck {
  int lhs = 0;
  int rhs = 0;
  bool holds = false;
};

/// Pugh's formula for the distance function near a Morse critical point of
/// index i on a leaf of real dimension n. The exit region of a small sphere
/// is homotopic to S^{i-1} x D^{n-i}, its boundary to S^{i-1} x S^{n-i-1}:
///   (-1)^i = chi(B, S) + chi(R^1_-, G^1) + chi(R^2_-)
///          = 1 + chi(S^{n-i-1}) - chi(S^{i-1}) chi(S^{n-i-1}).
/// At i = 0 the exit region is empty (rhs = 1); at i = n it is the whole
/// boundary sphere and G^1 is empty (rhs = 1 + chi(S^{n-1})).
constexpr IdentityCheck morse_sphere_identity(int n, int i) {
  if (n < 0 || n % 2 != 0) {
    throw InputError("leaf dimension n must be even and non-negative");
  }
  if (i < 0 || i > n) {
    throw InputError("Morse index must satisfy 0 <= i <= n");
  }
  IdentityCheck c;
  c.lhs = i % 2 == 0 ? 1 : -1;
  if (i == 0) {
    c.rhs = 1;
  } else if (i == n) {
    c.rhs = 1 + euler_sphere(n - 1);
  } else {
    c.rhs = 1 + euler_sphere(n - i - 1) - euler_sphere(i - 1) * euler_sphere(n - i - 1);
  }
  c.holds = c.lhs == c.rhs;
  return c;
}

struct BoundarySample {
  Eigen::Vector2d point;
  Eigen::Vector2d field;
  Eigen::Vector2d normal; // outward
};

struct ChiTerm {
  std::string label;
  int value = 0;
};

struct IndexReport {
  int interior_tangencies = 0;
  int exterior_tangencies = 0;
  /// Poincare's formula; empty when the audit is flagged as under-sampled.
  std::optional<int> index;
  int winding = 0;
  double winding_raw = 0.0;
  bool undersampled = false;
  /// index present and equal to the winding number.
  bool consistent = false;
  std::vector<ChiTerm> chi_terms;
  std::vector<std::string> notes;
};

/// Boundary tangency audit of a planar field on a closed curve.
///
/// s_k = <v, n> at each sample; a sign change between consecutive samples is a
/// tangency. Along the boundary, with traversal direction tau, a trajectory
/// through the tangency has d^2/dt^2 <x, n> proportional to <v, tau> ds/dtheta,
/// so the tangency is exterior (trajectory stays outside) when <v, tau> and
/// the change of s have the same sign, interior otherwise.
///
/// The field's winding number along the curve is accumulated from wrapped
/// angle increments and compared with 1 + (i - e)/2.
inline IndexReport disc_tangency_audit(const std::vector<BoundarySample>& samples, int samples_per_pair = 90) {
  const auto N = samples.size();
  if (N < 3) {
    throw InputError("audit needs at least 3 boundary samples");
  }
  for (const auto& s : samples) {
    if (!s.point.allFinite() || !s.field.allFinite() || !s.normal.allFinite()) {
      throw InputError("non-finite boundary sample");
    }
    if (s.field.norm() == 0.0) {
      throw InputError("field vanishes on the boundary");
    }
  }

  // orientation from the shoelace area: winding along a clockwise curve is -index
  double area2 = 0.0;
  for (std::size_t k = 0; k < N; ++k) {
    const auto& a = samples[k].point;
    const auto& b = samples[(k + 1) % N].point;
    area2 += a.x() * b.y() - a.y() * b.x();
  }
  const double orientation = area2 >= 0.0 ? 1.0 : -1.0;

  IndexReport rep;
  auto sgn = [](double v) { return v < 0.0 ? -1 : 1; };
  double total = 0.0;
  double max_step = 0.0;
  for (std::size_t k = 0; k < N; ++k) {
    const auto& a = samples[k];
    const auto& b = samples[(k + 1) % N];
    const double sa = a.field.dot(a.normal);
    const double sb = b.field.dot(b.normal);
    if (sgn(sa) != sgn(sb)) {
      const Eigen::Vector2d tau = b.point - a.point;
      const Eigen::Vector2d v = 0.5 * (a.field + b.field);
      const double along = v.dot(tau);
      if (along == 0.0) {
        rep.notes.push_back("tangency between samples " + std::to_string(k) + " and " +
                            std::to_string((k + 1) % N) + " is not classifiable");
        rep.undersampled = true;
      } else if ((along > 0.0) == (sb - sa > 0.0)) {
        ++rep.exterior_tangencies;
      } else {
        ++rep.interior_tangencies;
      }
    }
    double d = std::atan2(b.field.y(), b.field.x()) - std::atan2(a.field.y(), a.field.x());
    while (d > std::numbers::pi) {
      d -= 2.0 * std::numbers::pi;
    }
    while (d <= -std::numbers::pi) {
      d += 2.0 * std::numbers::pi;
    }
    total += d;
    max_step = std::max(max_step, std::abs(d));
  }
  rep.winding_raw = orientation * total / (2.0 * std::numbers::pi);
  rep.winding = static_cast<int>(std::lround(rep.winding_raw));

  const int t = rep.interior_tangencies + rep.exterior_tangencies;
  if (max_step > std::numbers::pi / 2.0) {
    rep.undersampled = true;
    rep.notes.push_back("field turns by more than pi/2 between consecutive samples");
  }
  if (t > 0 && N < static_cast<std::size_t>(samples_per_pair) * static_cast<std::size_t>((t + 1) / 2)) {
    rep.undersampled = true;
    rep.notes.push_back("fewer than " + std::to_string(samples_per_pair) + " samples per tangency pair");
  }

  rep.chi_terms = {{"chi(M,dM)", 1}, {"chi(R1-,G1)", -t / 2}, {"chi(R2-)", rep.interior_tangencies}};
  if (!rep.undersampled) {
    rep.index = poincare_index(rep.interior_tangencies, rep.exterior_tangencies);
    rep.consistent = *rep.index == rep.winding;
    if (!rep.consistent) {
      rep.notes.push_back("Poincare index and winding number disagree");
    }
  }
  return rep;
}

/// Samples of a field on the circle |x - center| = radius, counterclockwise.
template <class Field>
std::vector<BoundarySample> circle_samples(Field&& field, int count, double radius = 1.0,
                                           Eigen::Vector2d center = Eigen::Vector2d::Zero()) {
  std::vector<BoundarySample> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    const double th = 2.0 * std::numbers::pi * k / count;
    const Eigen::Vector2d n(std::cos(th), std::sin(th));
    const Eigen::Vector2d p = center + radius * n;
    out.push_back({p, field(p), n});
  }
  return out;
}

} // namespace holocontact
