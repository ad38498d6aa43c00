// Descend |z|^2 on a leaf of F = (3 z1^2 + 2 z2^2 + z3^2) / 2, then check the
// critical point's Hessian, its persistence, and a planar index audit.
#include <cstdio>

#include "holocontact/holocontact.hpp"

using namespace holocontact;

int main() {
  CVec d(3);
  d << 3.0, 2.0, 1.0;
  const auto F = FirstIntegral::from_potential(quadratic_potential(SymMatrix::diagonal(d)));
  const Complex c{1.0, 0.0};

  const CVec z0 = random_leaf_point(F, c, 7, 0);
  const LeafChart chart = LeafChart::at(F, z0, c);
  const FlowResult r = flow_to_critical(chart, z0, FlowDirection::descend, 1e-10, 10000);
  std::printf("flow: %d steps (%d rejected), |z|^2 %.6f -> %.6f\n", r.steps, r.rejected,
              r.phi_trace.empty() ? z0.squaredNorm() : r.phi_trace.front(), r.point.z.squaredNorm());
  std::printf("end point:");
  for (Eigen::Index j = 0; j < r.point.z.size(); ++j) {
    std::printf(" (%.6f, %.6f)", r.point.z(j).real(), r.point.z(j).imag());
  }
  std::printf("\n");

  const HessianReport h = leaf_hessian(chart, r.point.z);
  std::printf("hessian eigenvalues:");
  for (Eigen::Index k = 0; k < h.eigenvalues.size(); ++k) {
    std::printf(" %.6f", h.eigenvalues(k));
  }
  std::printf("  index %d\n", h.negative_count);

  const PersistenceReport p = index_persistence(chart, h.point, Complex{0.02, 0.01});
  std::printf("persists on c + dc: %s (moved %.3e, bound %.3e)\n", p.persisted ? "yes" : "no", p.distance,
              p.radius_bound);

  // planar index of z^2 - conj(z)/4 around the origin
  auto field = [](const Eigen::Vector2d& x) {
    const Complex z(x.x(), x.y());
    const Complex v = z * z - 0.25 * std::conj(z);
    return Eigen::Vector2d(v.real(), v.imag());
  };
  const IndexReport a = disc_tangency_audit(circle_samples(field, 720, 0.1));
  std::printf("audit: i=%d e=%d index=%d winding=%d\n", a.interior_tangencies, a.exterior_tangencies,
              a.index.value_or(0), a.winding);
  return 0;
}
