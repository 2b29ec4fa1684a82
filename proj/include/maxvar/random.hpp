#pragma once

#include <cstdint>
#include <initializer_list>

namespace maxvar {

/// Portable random stream: the same seed gives the same sequence with every
/// compiler and standard library, which std::uniform_int_distribution does
/// not promise.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : state_(seed) {}

  /// Derives an independent stream from a master seed and a tuple of labels,
  /// so that (seed, e, p, trial) always maps to the same sequence.
  static RandomStream derive(std::uint64_t seed, std::initializer_list<std::uint64_t> labels) {
    std::uint64_t s = mix(seed ^ 0x6a09e667f3bcc909ULL);
    for (std::uint64_t label : labels) s = mix(s ^ mix(label + 0x9e3779b97f4a7c15ULL));
    return RandomStream(s);
  }

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  /// Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t x = next();
      if (x >= threshold) return x % bound;
    }
  }

  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + below(span));
  }

 private:
  // splitmix64 finalizer
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace maxvar
