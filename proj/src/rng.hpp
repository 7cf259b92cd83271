#pragma once

#include <cstdint>

#include "complex_core.hpp"

namespace symb {

// SplitMix64 (Steele, Lea, Flood 2014).  Chosen over <random> engines because
// every verification run must be bit-reproducible across platforms and
// std::uniform_real_distribution is not; the generator plus the conversion
// below are fully specified here.
class splitmix64 {
public:
  explicit splitmix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1): top 53 bits scaled by 2^-53.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

private:
  std::uint64_t state_;
};

// SplitMix64 finalizer, used to derive independent per-sample streams.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Stream for sample `index` of run `seed`.  Each sample owns its stream, so
// results are independent of evaluation order and of how many draws other
// samples consume.
inline splitmix64 sample_stream(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(mix64(seed + 0x9E3779B97F4A7C15ull * (index + 1)));
}

// Uniform on the open disc of the given radius, by rejection from the square.
inline cplx random_disc(splitmix64& g, double radius = 1.0) {
  for (;;) {
    const double x = g.uniform(-1.0, 1.0);
    const double y = g.uniform(-1.0, 1.0);
    if (x * x + y * y < 1.0) return {radius * x, radius * y};
  }
}

} // namespace symb
