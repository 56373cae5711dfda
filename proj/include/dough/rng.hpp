#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace dough {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Deterministic RNG. mt19937_64 has a standard-pinned output sequence and the
// transforms below avoid std::*_distribution (whose sequences are
// implementation-defined), so streams are identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Integer in [lo, hi], inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const double u = uniform() * static_cast<double>(hi - lo + 1);
    std::int64_t v = lo + static_cast<std::int64_t>(u);
    return v > hi ? hi : v;
  }

  // Box-Muller; draws a fresh pair per call, the sine half is discarded.
  double gaussian(double sd) {
    double u1 = uniform();
    const double u2 = uniform();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return sd * std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace dough
