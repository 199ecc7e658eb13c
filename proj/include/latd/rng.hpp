#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

// Counter-based deterministic random streams. Every stochastic quantity in
// the project is drawn from a stream keyed by (master seed, purpose, point,
// frame), so results are bit-reproducible regardless of evaluation order.
// The generator is SplitMix64; gaussians use an explicit Box-Muller pair so
// sequences do not depend on a standard library's distribution internals.
namespace latd {

enum class StreamPurpose : std::uint64_t {
  kFading = 1,
  kNoise = 2,
  kMessage = 3,
  kCodeBlocks = 4,
  kOutage = 5,
  kGeneric = 6,
};

namespace detail {
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}
}  // namespace detail

class RngStream {
 public:
  explicit RngStream(std::uint64_t state) : state_(state) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    return detail::mix64(state_);
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound) by rejection (no modulo bias).
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (~0ull / bound);
    std::uint64_t v = next_u64();
    while (v >= limit) v = next_u64();
    return v % bound;
  }

  double next_gaussian() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    // 1 - u in (0, 1] keeps the log argument positive.
    const double r = std::sqrt(-2.0 * std::log(1.0 - next_unit()));
    const double phi = 2.0 * std::numbers::pi * next_unit();
    cached_ = r * std::sin(phi);
    has_cached_ = true;
    return r * std::cos(phi);
  }

  // Standard exponential (mean 1).
  double next_exponential() { return -std::log(1.0 - next_unit()); }

 private:
  std::uint64_t state_;
  bool has_cached_ = false;
  double cached_ = 0.0;
};

inline RngStream make_stream(std::uint64_t master_seed, StreamPurpose purpose,
                             std::uint64_t point, std::uint64_t frame) {
  std::uint64_t h = detail::mix64(master_seed ^ 0xD1B54A32D192ED03ull);
  h = detail::mix64(h ^ (0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(purpose) + 1));
  h = detail::mix64(h ^ (0xBF58476D1CE4E5B9ull * point + 2));
  h = detail::mix64(h ^ (0x94D049BB133111EBull * frame + 3));
  return RngStream(h);
}

}  // namespace latd
