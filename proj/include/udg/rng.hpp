// Small deterministic PRNG used across the library (shuffles, walker streams,
// randomized tests). SplitMix64 steps with manual double/int derivation so
// results are identical across platforms and standard libraries; independent
// streams come from mixing a base seed with a stream index.

#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace udg {

class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // uniform integer in [0, n)
  std::uint64_t next_below(std::uint64_t n) {
    return static_cast<std::uint64_t>(next_double() * static_cast<double>(n)) %
           n;
  }

  double next_range(double a, double b) { return a + (b - a) * next_double(); }

  // standard normal via Box-Muller (no state carried between calls)
  double next_gauss() {
    double u1 = next_double();
    while (u1 <= 0.0) u1 = next_double();
    const double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  template <typename T>
  void shuffle(std::vector<T>& xs) {
    for (std::size_t i = xs.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(next_below(i));
      std::swap(xs[i - 1], xs[j]);
    }
  }

private:
  std::uint64_t state_;
};

// Independent stream k of a base seed; used for per-run walker randomness.
inline Rng rng_stream(std::uint64_t seed, std::uint64_t k) {
  Rng mixer(seed ^ (0x5851f42d4c957f2dULL * (k + 1)));
  return Rng(mixer.next_u64());
}

}  // namespace udg
