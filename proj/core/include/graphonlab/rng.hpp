#pragma once

#include <cstdint>

namespace graphonlab {

// SplitMix64 in counter mode.  The i-th draw of a stream is
// mix(key + (i+1) * GAMMA); mix is the SplitMix64 finalizer.  Streams are
// split by rekeying with the child id, so one user seed fans out into
// independent substreams (coordinate draws vs edge coins, one stream per
// trial) without any shared mutable state.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : key_(mix(seed ^ kSeedTag)) {}

  // Child stream; deterministic in (parent key, id).
  CounterRng substream(std::uint64_t id) const {
    CounterRng child(0);
    child.key_ = mix(key_ + (id + 1) * kStreamTag);
    child.counter_ = 0;
    return child;
  }

  std::uint64_t next_u64() { return mix(key_ + (++counter_) * kGamma); }

  // Uniform in [0, 1), 53 random bits.
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform in {0, ..., n-1}, unbiased by rejection.
  std::uint64_t next_below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v = next_u64();
    while (v >= limit) v = next_u64();
    return v % n;
  }

  bool next_coin(double p) { return next_unit() < p; }

 private:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;
  static constexpr std::uint64_t kSeedTag = 0x5851F42D4C957F2Dull;
  static constexpr std::uint64_t kStreamTag = 0xD1342543DE82EF95ull;

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace graphonlab
