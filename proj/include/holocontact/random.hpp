#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

#include <Eigen/Dense>

namespace holocontact {

/// Counter-based generator: the value at (key, stream, counter) is a pure
/// function of its arguments, so sample i of a run does not depend on how
/// many samples were drawn before it, on thread scheduling, or on the
/// platform's <random> implementation.
class CounterRng {
public:
  constexpr CounterRng(std::uint64_t key, std::uint64_t stream) noexcept
      : base_(mix(mix(key ^ 0x243f6a8885a308d3ULL) + stream * 0x9e3779b97f4a7c15ULL)) {}

  constexpr std::uint64_t bits(std::uint64_t counter) const noexcept {
    return mix(base_ + (counter + 1) * 0xd1b54a32d192ed03ULL);
  }

  /// Uniform in the open interval (0, 1).
  constexpr double uniform(std::uint64_t counter) const noexcept {
    return (static_cast<double>(bits(counter) >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller; consumes counters 2k and 2k+1.
  double normal(std::uint64_t k) const noexcept {
    const double u1 = uniform(2 * k);
    const double u2 = uniform(2 * k + 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

private:
  // splitmix64 finalizer
  static constexpr std::uint64_t mix(std::uint64_t x) noexcept {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
  }

  std::uint64_t base_;
};

/// Complex Gaussian vector (independent standard normal real and imaginary parts).
inline Eigen::VectorXcd gaussian_cvec(const CounterRng& rng, Eigen::Index n) {
  Eigen::VectorXcd v(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    v(j) = {rng.normal(static_cast<std::uint64_t>(2 * j)),
            rng.normal(static_cast<std::uint64_t>(2 * j + 1))};
  }
  return v;
}

/// Uniform point on the sphere |z| = r in C^n.
inline Eigen::VectorXcd sphere_point(std::uint64_t key, std::uint64_t stream, Eigen::Index n,
                                     double r) {
  Eigen::VectorXcd v = gaussian_cvec(CounterRng(key, stream), n);
  return v * (r / v.norm());
}

} // namespace holocontact
