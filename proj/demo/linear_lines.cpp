// Contact lines of a linear form and their Morse indices.
#include <cstdio>

#include "holocontact/holocontact.hpp"

using namespace holocontact;

int main() {
  CMat m(3, 3);
  m << Complex(2.0, 0.5), 0.3, Complex(0.0, -0.4),
       0.3, 1.0, 0.2,
       Complex(0.0, -0.4), 0.2, Complex(-0.5, 0.1);
  const SymMatrix A(m);

  const LinearAnalysis a = analyze(A);
  std::printf("morse: %s  min gap %.6g\n", a.verdict.is_morse ? "yes" : "no", a.verdict.min_gap);
  for (const auto& line : morse_indices(A).lines) {
    std::printf("sigma %.6f  |mu| %.6f  index %d  residual %.2e\n", line.sigma, line.mu_modulus,
                line.morse_index.value_or(-1), line.residual);
  }

  // the solver finds the same lines on the unit sphere, one point per line up to phase
  const auto rep = solve_on_sphere(linear_form(A), 1.0, 40, 1, 1e-10);
  std::printf("solver: %zu contact points from %d seeds\n", rep.points.size(), rep.seeds_tried);
  for (const auto& p : rep.points) {
    std::printf("  |mu| %.6f  residual %.2e\n", std::abs(p.mu), p.residual);
  }

  // a degenerate matrix, and its nearest Morse perturbation
  const SymMatrix I = SymMatrix::identity(3);
  const SymMatrix J = morseify(I, 1e-3);
  std::printf("identity morse: %s, after morseify: %s\n", analyze(I).verdict.is_morse ? "yes" : "no",
              analyze(J).verdict.is_morse ? "yes" : "no");
  return 0;
}
