#pragma once

#include <cstdint>
#include <vector>

namespace gcodec {

// SplitMix64 (Steele, Lea, Flood 2014). Tiny, fully specified, and
// platform-independent: every seeded run of the library reproduces
// byte-identically because all randomness flows through this generator
// rather than through implementation-defined standard distributions.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound), bound > 0. Rejection sampling keeps it unbiased.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % bound);
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

  // Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[below(i)]);
  }

private:
  std::uint64_t state_;
};

} // namespace gcodec
