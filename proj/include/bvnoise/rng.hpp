#ifndef BVNOISE_RNG_HPP_
#define BVNOISE_RNG_HPP_

#include <cstdint>

namespace bvnoise {

/// The splitmix64 output finalizer (Stafford variant 13).
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

/// Counter-based generator. Draw k (k = 1, 2, ...) of a stream with key K is
/// mix64(K + k * kGoldenGamma), i.e. splitmix64 seeded with K. A stream is
/// fully determined by its key, so independent streams can be drawn in any
/// order or on any thread.
///
/// Per-shot keys come from for_stream(seed, index):
///   K = mix64(seed ^ mix64(index + kGoldenGamma)).
class CounterRng {
 public:
  explicit constexpr CounterRng(std::uint64_t key) : key_(key) {}

  static constexpr CounterRng for_stream(std::uint64_t seed, std::uint64_t index) {
    return CounterRng(mix64(seed ^ mix64(index + kGoldenGamma)));
  }

  constexpr std::uint64_t next_u64() {
    ++counter_;
    return mix64(key_ + counter_ * kGoldenGamma);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  constexpr double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  constexpr std::uint64_t key() const { return key_; }
  constexpr std::uint64_t draws() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace bvnoise

#endif  // BVNOISE_RNG_HPP_
