// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Usage: holocontact_acceptance <path-to-holocontact-cli> <data-dir>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "holocontact/holocontact.hpp"

using namespace holocontact;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) {
      detail = why;
    }
    pass = false;
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

CMat random_symmetric(std::uint64_t key, std::uint64_t stream, Eigen::Index n) {
  const CVec g = gaussian_cvec(CounterRng(key, stream), n * n);
  CMat G = Eigen::Map<const CMat>(g.data(), n, n);
  return 0.5 * (G + G.transpose());
}

CMat random_unitary(std::uint64_t key, std::uint64_t stream, Eigen::Index n) {
  const CVec g = gaussian_cvec(CounterRng(key, stream), n * n);
  const CMat G = Eigen::Map<const CMat>(g.data(), n, n);
  Eigen::HouseholderQR<CMat> qr(G);
  return qr.householderQ() * CMat::Identity(n, n);
}

CVec diag_vec(std::initializer_list<double> v) {
  CVec d(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) {
    d(i++) = x;
  }
  return d;
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
  Outcome o;
  const auto t0 = Clock::now();
  const CVec d = diag_vec({3, 2, 1});
  const SymMatrix A = SymMatrix::diagonal(d);
  const auto a = analyze(A);
  if (!a.verdict.is_morse) {
    o.fail("diag(3,2,1) not reported Morse");
  }
  const auto idx = morse_indices(A);
  if (idx.lines.size() != 3) {
    o.fail("expected 3 contact lines");
    return o;
  }
  const auto F = FirstIntegral::from_potential(quadratic_potential(A));
  double worst_rel = 0.0;
  for (int j = 0; j < 3; ++j) {
    const auto& line = idx.lines[static_cast<std::size_t>(j)];
    if ((line.direction - CVec::Unit(3, j)).norm() > 1e-6) {
      o.fail("line " + std::to_string(j) + " is not the coordinate axis");
    }
    if (line.morse_index != j) {
      o.fail("line " + std::to_string(j) + " has the wrong Morse index");
    }
    // point of the axis on the leaf F = 1
    const CVec p = std::sqrt(2.0 / d(j).real()) * CVec::Unit(3, j);
    const auto h = leaf_hessian(LeafChart::at(F, p, Complex{1.0, 0.0}), p);
    const auto closed = closed_form_line_spectrum(a.verdict.sigma, j);
    for (std::size_t k = 0; k < closed.size(); ++k) {
      const double rel = std::abs(h.eigenvalues(static_cast<Eigen::Index>(k)) - closed[k]) /
                         std::max(1.0, std::abs(closed[k]));
      worst_rel = std::max(worst_rel, rel);
    }
    if (h.negative_count != j) {
      o.fail("numeric Hessian index disagrees on line " + std::to_string(j));
    }
  }
  if (worst_rel > 1e-6) {
    o.fail("numeric vs closed-form Hessian relative error " + std::to_string(worst_rel));
  }
  const double dt = seconds_since(t0);
  if (dt >= 1.0) {
    o.fail("runtime " + std::to_string(dt) + " s");
  }
  if (o.pass) {
    std::ostringstream os;
    os << "axes, indices (0,1,2), Hessian rel err " << worst_rel << ", " << dt << " s";
    o.detail = os.str();
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  const SymMatrix I = SymMatrix::identity(3);
  const auto v = analyze(I).verdict;
  if (v.is_morse || v.min_gap != 0.0) {
    o.fail("identity: is_morse or min_gap != 0");
  }
  const auto F = FirstIntegral::from_potential(quadratic_potential(I));
  const CVec p = std::sqrt(2.0) * CVec::Unit(3, 0);
  const auto h = leaf_hessian(LeafChart::at(F, p, Complex{1.0, 0.0}), p);
  const double smallest = h.eigenvalues.cwiseAbs().minCoeff();
  if (smallest > 1e-6) {
    o.fail("identity leaf Hessian has no eigenvalue near 0 (min |ev| " + std::to_string(smallest) + ")");
  }
  const SymMatrix P = SymMatrix::diagonal(diag_vec({1.0 + 3e-3, 1.0 + 2e-3, 1.0 + 1e-3}));
  if (!analyze(P).verdict.is_morse) {
    o.fail("perturbed identity not Morse");
  }
  if (o.pass) {
    std::ostringstream os;
    os << "identity min_gap 0, min |Hessian ev| " << smallest << "; perturbed Morse";
    o.detail = os.str();
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto t0 = Clock::now();
  double worst_margin = std::numeric_limits<double>::infinity();
  double worst_err = 0.0;
  for (int k = 0; k < 200; ++k) {
    const Eigen::Index n = 2 + k % 5;
    const SymMatrix A(random_symmetric(3, static_cast<std::uint64_t>(k), n));
    // independent route: explicit inverse, then A^{-1} conj(A^{-1})
    const CMat Ainv = A.entries().fullPivLu().inverse();
    const CMat B = Ainv * Ainv.conjugate();
    const CMat Bh = 0.5 * (B + B.adjoint());
    const RVec ev = Eigen::SelfAdjointEigenSolver<CMat>(Bh).eigenvalues();
    const double nb = Bh.norm();
    worst_margin = std::min(worst_margin, ev.minCoeff() / nb);
    const CMat G = gram_inverse(A).entries();
    worst_err = std::max(worst_err, (B - G).norm() / nb);
  }
  if (!(worst_margin > 1e-10)) {
    o.fail("eigenvalue margin " + std::to_string(worst_margin));
  }
  if (worst_err > 1e-10) {
    o.fail("B vs (conj(A) A)^-1 relative error " + std::to_string(worst_err));
  }
  const double dt = seconds_since(t0);
  if (dt >= 10.0) {
    o.fail("runtime " + std::to_string(dt) + " s");
  }
  if (o.pass) {
    std::ostringstream os;
    os << "min lambda/|B| " << worst_margin << ", max rel err " << worst_err << ", " << dt << " s";
    o.detail = os.str();
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  int full_recovery = 0;
  int total = 0;
  double worst_dist = 0.0;
  for (int k = 0; k < 50; ++k) {
    const Eigen::Index n = k < 25 ? 3 : 4;
    const SymMatrix A(random_symmetric(4, static_cast<std::uint64_t>(k), n));
    const auto a = analyze(A);
    if (!a.verdict.is_morse) {
      o.fail("random matrix " + std::to_string(k) + " not Morse");
      continue;
    }
    ++total;
    const auto sol = solve_on_sphere(linear_form(A), 1.0, 50, 100 + static_cast<std::uint64_t>(k), 1e-9);
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (const auto& p : sol.points) {
      double best = std::numeric_limits<double>::infinity();
      std::size_t arg = 0;
      for (std::size_t j = 0; j < a.lines.lines.size(); ++j) {
        const double dj = line_distance(p.z, a.lines.lines[j].direction);
        if (dj < best) {
          best = dj;
          arg = j;
        }
      }
      worst_dist = std::max(worst_dist, best);
      if (best <= 1e-6) {
        hit[arg] = true;
      } else {
        o.fail("matrix " + std::to_string(k) + ": solver point off every contact line");
      }
    }
    if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) {
      ++full_recovery;
    }
    const auto tang = unit_sphere_tangencies(A);
    if (static_cast<Eigen::Index>(tang.size()) != n) {
      o.fail("unit_sphere_tangencies returned " + std::to_string(tang.size()) + " witnesses");
    }
    for (const auto& t : tang) {
      if (t.residual > 1e-9) {
        o.fail("tangency witness residual " + std::to_string(t.residual));
      }
    }
  }
  const double frac = total ? static_cast<double>(full_recovery) / total : 0.0;
  if (frac < 0.9) {
    o.fail("all lines recovered in only " + std::to_string(frac * 100) + "% of matrices");
  }
  if (o.pass) {
    std::ostringstream os;
    os << "all lines recovered in " << full_recovery << "/" << total << ", max line distance " << worst_dist;
    o.detail = os.str();
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  const PolyOneForm form = symplectic_form(2);
  double worst = 0.0;
  for (int k = 0; k < 10000; ++k) {
    const CVec z = sphere_point(5, static_cast<std::uint64_t>(k), 4, 1.0);
    worst = std::max(worst, std::abs(contact_residual(form, z) - 1.0));
  }
  if (worst > 1e-12) {
    o.fail("residual deviates from 1 by " + std::to_string(worst));
  }
  const auto sol = solve_on_sphere(form, 1.0, 50, 5, 1e-9);
  if (!sol.points.empty()) {
    o.fail("contact solver returned " + std::to_string(sol.points.size()) + " points");
  }
  if (o.pass) {
    std::ostringstream os;
    os << "max |residual - 1| " << worst << " over 1e4 points, solver empty";
    o.detail = os.str();
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto t0 = Clock::now();
  const SymMatrix A = SymMatrix::diagonal(diag_vec({3, 2, 1}));
  const auto F = FirstIntegral::from_potential(quadratic_potential(A));
  const Complex c{1.0, 0.0};
  const double target = std::sqrt(2.0 / 3.0);
  const CVec axis = CVec::Unit(3, 0);
  double worst_r = 0.0;
  double worst_axis = 0.0;
  double worst_t = 0.0;
  for (int s = 0; s < 20; ++s) {
    const CVec z0 = random_leaf_point(F, c, 6, static_cast<std::uint64_t>(s));
    const auto chart = LeafChart::at(F, z0, c);
    const auto r = flow_to_critical(chart, z0, FlowDirection::descend, 1e-10, 20000);
    worst_r = std::max(worst_r, std::abs(r.point.z.norm() - target));
    worst_axis = std::max(worst_axis, line_distance(r.point.z, axis));
    worst_t = std::max(worst_t, sample_field(F.form, r.point.z).t_norm);
    for (std::size_t k = 1; k < r.phi_trace.size(); ++k) {
      if (!(r.phi_trace[k] < r.phi_trace[k - 1])) {
        o.fail("phi not strictly decreasing along accepted steps (seed " + std::to_string(s) + ")");
      }
    }
  }
  if (worst_r > 1e-6) o.fail("| |z| - sqrt(2/3) | = " + std::to_string(worst_r));
  if (worst_axis > 1e-6) o.fail("distance to first axis " + std::to_string(worst_axis));
  if (worst_t > 1e-8) o.fail("t_norm " + std::to_string(worst_t));
  const double dt = seconds_since(t0);
  if (dt >= 5.0) {
    o.fail("runtime " + std::to_string(dt) + " s");
  }
  if (o.pass) {
    std::ostringstream os;
    os << "20 seeds: max radius err " << worst_r << ", axis dist " << worst_axis << ", t_norm " << worst_t << ", "
       << dt << " s";
    o.detail = os.str();
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  const SymMatrix A = SymMatrix::diagonal(diag_vec({3, 2, 1}));
  const auto F = FirstIntegral::from_potential(quadratic_potential(A));
  const Complex c{1.0, 0.0};
  const std::array<Complex, 2> shifts{Complex{0.01, 0.0}, Complex{0.0, 0.01}};
  std::ostringstream os;
  for (int j = 0; j < 2; ++j) {
    const CVec p = std::sqrt(2.0 / (3.0 - j)) * CVec::Unit(3, j);
    const auto chart = LeafChart::at(F, p, c);
    ContactPoint cp = make_contact_point(F.form, p);
    cp.morse_index = leaf_hessian(chart, p).negative_count;
    if (cp.morse_index != j) {
      o.fail("Sigma_" + std::to_string(j + 1) + " point has index " + std::to_string(*cp.morse_index));
    }
    for (const Complex dc : shifts) {
      const auto r = index_persistence(chart, cp, dc);
      if (!r.persisted || r.index_after != j) {
        o.fail("Sigma_" + std::to_string(j + 1) + " did not persist to c = " + std::to_string((c + dc).real()) +
               "+" + std::to_string((c + dc).imag()) + "i: " + r.note);
      }
      os << "S" << j + 1 << "(dc=" << dc.real() << "+" << dc.imag() << "i): " << r.index_before << "->"
         << r.index_after.value_or(-1) << " d=" << r.distance << "; ";
    }
  }
  if (o.pass) {
    o.detail = os.str();
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  const Polynomial cubic = power_sum(3, 3);
  const PolyOneForm form = differential(cubic);
  const auto sol = solve_on_sphere(form, 1.0, 200, 8, 1e-9);
  if (sol.points.empty()) {
    o.fail("no contact points found");
  }
  const std::vector<Complex> T{{0.5, 0.0}, {0.0, 1.0}, {1.0, 1.0}, {0.0, std::numbers::pi / 4.0}};
  for (const auto& p : sol.points) {
    if (!radial_invariance_check(form, p, T, 1e-9)) {
      o.fail("radial invariance fails at a contact point");
    }
  }
  if (o.pass) {
    o.detail = std::to_string(sol.points.size()) + " contact points (mod phase), all radially invariant";
  }
  return o;
}

// Independent winding oracle: fine sampling with unwrapped angles.
int winding_oracle(const std::function<Eigen::Vector2d(const Eigen::Vector2d&)>& v, Eigen::Vector2d center,
                   double radius) {
  const int N = 20000;
  double total = 0.0;
  Eigen::Vector2d prev = v(center + radius * Eigen::Vector2d(1.0, 0.0));
  for (int k = 1; k <= N; ++k) {
    const double th = 2.0 * std::numbers::pi * k / N;
    const Eigen::Vector2d cur = v(center + radius * Eigen::Vector2d(std::cos(th), std::sin(th)));
    // angle between consecutive samples via cross/dot
    total += std::atan2(prev.x() * cur.y() - prev.y() * cur.x(), prev.dot(cur));
    prev = cur;
  }
  return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

Outcome criterion9() {
  Outcome o;
  int identities = 0;
  for (int n = 0; n <= 12; n += 2) {
    for (int i = 0; i <= n; ++i) {
      ++identities;
      if (!morse_sphere_identity(n, i).holds) {
        o.fail("identity fails at n=" + std::to_string(n) + ", i=" + std::to_string(i));
      }
    }
  }
  // 50 planar fields: products of (z - a) and conj(z - b) factors with a small
  // generic polynomial perturbation, on random circles.
  int agreed = 0;
  int fields = 0;
  std::vector<int> seen;
  for (std::uint64_t k = 0; fields < 50 && k < 1000; ++k) {
    const CounterRng rng(9, k);
    const int holo = 1 + static_cast<int>(rng.uniform(0) * 3.0);
    const int anti = static_cast<int>(rng.uniform(1) * 3.0);
    std::vector<std::complex<double>> roots;
    for (int r = 0; r < holo + anti; ++r) {
      roots.emplace_back(1.6 * (rng.uniform(10 + 2 * r) - 0.5), 1.6 * (rng.uniform(11 + 2 * r) - 0.5));
    }
    const double e1 = 0.2 * rng.normal(50);
    const double e2 = 0.2 * rng.normal(51);
    auto field = [=](const Eigen::Vector2d& p) {
      const std::complex<double> z{p.x(), p.y()};
      std::complex<double> w{1.0, 0.0};
      for (int r = 0; r < holo + anti; ++r) {
        w *= r < holo ? (z - roots[static_cast<std::size_t>(r)]) : std::conj(z - roots[static_cast<std::size_t>(r)]);
      }
      w += std::complex<double>{e1 * p.x() * p.y(), e2 * p.x() * p.x()};
      return Eigen::Vector2d(w.real(), w.imag());
    };
    const Eigen::Vector2d center(0.3 * rng.normal(60), 0.3 * rng.normal(61));
    const double radius = 0.5 + rng.uniform(62);
    // boundary must stay clear of zeros
    double min_abs = std::numeric_limits<double>::infinity();
    for (int s = 0; s < 4000; ++s) {
      const double th = 2.0 * std::numbers::pi * s / 4000;
      min_abs = std::min(min_abs, field(center + radius * Eigen::Vector2d(std::cos(th), std::sin(th))).norm());
    }
    if (min_abs < 1e-2) {
      continue;
    }
    ++fields;
    const int oracle = winding_oracle(field, center, radius);
    std::optional<int> audited;
    for (int count = 720; count <= 720 * 64 && !audited; count *= 2) {
      const auto rep = disc_tangency_audit(circle_samples(field, count, radius, center));
      audited = rep.index;
    }
    if (audited && *audited == oracle) {
      ++agreed;
      seen.push_back(oracle);
    } else {
      o.fail("field " + std::to_string(k) + ": Poincare " + (audited ? std::to_string(*audited) : "n/a") +
             " vs winding " + std::to_string(oracle));
    }
  }
  if (fields < 50) {
    o.fail("only " + std::to_string(fields) + " usable synthetic fields");
  }
  if (o.pass) {
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    std::ostringstream os;
    os << identities << " identities hold; " << agreed << "/" << fields << " fields agree (indices";
    for (int s : seen) os << " " << s;
    os << ")";
    o.detail = os.str();
  }
  return o;
}

Outcome criterion10() {
  Outcome o;
  int degenerate = 0;
  double worst_ratio = 0.0;
  for (int k = 0; k < 50; ++k) {
    const Eigen::Index n = 2 + k % 4;
    CMat M;
    if (k % 2 == 0) {
      // repeated Takagi values: U diag(s) U^T with a random unitary U
      const CounterRng rng(10, static_cast<std::uint64_t>(k));
      RVec s(n);
      for (Eigen::Index i = 0; i < n; ++i) {
        s(i) = 0.5 + rng.uniform(static_cast<std::uint64_t>(i));
      }
      s(n - 1) = s(0);
      if (n > 3) {
        s(1) = s(2);
      }
      const CMat U = random_unitary(10, 1000 + static_cast<std::uint64_t>(k), n);
      M = U * s.cast<Complex>().asDiagonal() * U.transpose();
      M = 0.5 * (M + M.transpose());
    } else {
      M = random_symmetric(10, static_cast<std::uint64_t>(k), n);
    }
    const SymMatrix A(M, 1e-9);
    const bool was_morse = analyze(A).verdict.is_morse;
    if (!was_morse) {
      ++degenerate;
    }
    for (double eps : {1e-2, 1e-4}) {
      const SymMatrix R = morseify(A, eps);
      const double dist = (R.entries() - A.entries()).norm();
      worst_ratio = std::max(worst_ratio, dist / eps);
      if (!analyze(R).verdict.is_morse) {
        o.fail("matrix " + std::to_string(k) + " eps " + std::to_string(eps) + ": result not Morse");
      }
      if (dist > eps) {
        o.fail("matrix " + std::to_string(k) + ": moved " + std::to_string(dist) + " > eps");
      }
      if (was_morse && R.entries() != A.entries()) {
        o.fail("matrix " + std::to_string(k) + ": Morse input was changed");
      }
      if (morseify(R, eps).entries() != R.entries()) {
        o.fail("matrix " + std::to_string(k) + ": not idempotent on its Morse output");
      }
    }
  }
  if (degenerate < 20) {
    o.fail("only " + std::to_string(degenerate) + " degenerate inputs were exercised");
  }
  if (o.pass) {
    std::ostringstream os;
    os << degenerate << " degenerate + " << 50 - degenerate << " Morse inputs; max |A'-A|/eps " << worst_ratio;
    o.detail = os.str();
  }
  return o;
}

std::string capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) {
    out.append(buf.data(), got);
  }
  status = pclose(p);
  return out;
}

Outcome criterion11(const std::string& cli, const std::string& data) {
  Outcome o;
  const std::vector<std::string> runs{
      "contact-solve --input " + data + "/diag321.json --seeds 40 --rng-seed 7",
      "contact-solve --input " + data + "/cubic3.json --seeds 40 --rng-seed 7",
      "scan --input " + data + "/diag321.json --samples 2000 --rng-seed 11",
      "leaf-flow --input " + data + "/leaf_diag321.json --rng-seed 3",
      "linear-analyze --input " + data + "/diag321.json",
  };
  for (const auto& r : runs) {
    int s1 = 0;
    int s2 = 0;
    int s3 = 0;
    const std::string a = capture(cli + " " + r + " 2>/dev/null", s1);
    const std::string b = capture(cli + " " + r + " 2>/dev/null", s2);
    const std::string c = capture(cli + " " + r + " --threads 4 2>/dev/null", s3);
    if (s1 != 0 || s2 != 0 || s3 != 0 || a.empty()) {
      o.fail("CLI run failed: " + r);
    } else if (a != b || a != c) {
      o.fail("reports differ: " + r);
    }
  }
  if (o.pass) {
    o.detail = std::to_string(runs.size()) + " commands byte-identical across repeats and --threads 4";
  }
  return o;
}

} // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: holocontact_acceptance <cli> <data-dir>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::string data = argv[2];
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria{
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},  {5, criterion5},  {6, criterion6},
      {7, criterion7}, {8, criterion8}, {9, criterion9}, {10, criterion10}, {11, [&] { return criterion11(cli, data); }},
  };
  int failed = 0;
  for (const auto& [id, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << " - " << o.detail << std::endl;
    failed += o.pass ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
