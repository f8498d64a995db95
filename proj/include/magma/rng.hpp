#pragma once

#include <cstdint>

namespace magma {

// splitmix64. Standard-library distributions are not stable across
// implementations, and every suite report must be byte-identical for a
// given seed, so the generator and the bounded draw are both pinned here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  // Uniform in [lo, hi] inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool chance(unsigned percent) { return below(100) < percent; }

  // Derives an independent stream; used to hand sub-generators to helpers
  // without coupling their draw counts.
  std::uint64_t fork() { return next() ^ 0xa0761d6478bd642fULL; }

 private:
  std::uint64_t state_;
};

}  // namespace magma
