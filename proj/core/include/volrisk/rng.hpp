#pragma once

#include <cmath>
#include <cstdint>

namespace volrisk {

/// SplitMix64 (Steele, Lea & Flood 2014).  Tiny, fast, and trivially keyable:
/// simulations key one stream per trader from (seed, stream index), so draws
/// never depend on thread scheduling.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Independent substream key for (seed, stream).  Two finalizer rounds keep
/// streams decorrelated even for consecutive indices.
inline std::uint64_t substream_key(std::uint64_t seed, std::uint64_t stream) {
  SplitMix64 g(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
  g();
  return g();
}

/// Per-stream draw source: uniforms in the open interval (0,1) and standard
/// normals via Box-Muller (pairs cached).
class SubstreamRng {
 public:
  SubstreamRng(std::uint64_t seed, std::uint64_t stream)
      : gen_(substream_key(seed, stream)) {}

  double uniform01() {
    // 53-bit mantissa, offset by half an ulp: never exactly 0 or 1.
    return (double(gen_() >> 11) + 0.5) * 0x1.0p-53;
  }

  double normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * 3.141592653589793238 * u2;
    cached_ = radius * std::sin(angle);
    have_cached_ = true;
    return radius * std::cos(angle);
  }

  /// Zero-mean unit-variance uniform draw: sqrt(3) * (2u - 1).
  double uniform_unit_variance() {
    return 1.7320508075688772935 * (2.0 * uniform01() - 1.0);
  }

 private:
  SplitMix64 gen_;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

}  // namespace volrisk
