#pragma once

#include <cstdint>
#include <cmath>

namespace scd {

// Counter-based splittable generator built on the SplitMix64 update.
// Streams derived from (seed, tags...) are independent and stable across
// platforms and thread schedules, which is what makes replicate-level
// parallelism reproducible.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform on (0,1), clamped away from the endpoints so that inverse-CDF
  // sampling never produces infinities.
  double next_uniform() {
    const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    constexpr double lo = 0x1.0p-53;
    if (u < lo) return lo;
    if (u > 1.0 - 1e-16) return 1.0 - 1e-16;
    return u;
  }

  static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    SplitMix64 g(a ^ (0x632be59bd9b4e019ULL + b));
    g.next_u64();
    return g.next_u64();
  }

  // Derive an independent stream for (seed, tag0, tag1).
  static SplitMix64 stream(std::uint64_t seed, std::uint64_t tag0,
                           std::uint64_t tag1 = 0) {
    return SplitMix64(mix(mix(seed, tag0), tag1));
  }

 private:
  std::uint64_t state_;
};

// Standard normal quantile, Wichura's PPND16 rational approximations
// (relative accuracy about 1e-16 on (0,1)).
double normal_quantile(double p);

// Standard normal CDF via erfc.
inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

}  // namespace scd
