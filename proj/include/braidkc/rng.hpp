#pragma once

#include <cstdint>

namespace braidkc {

// Deterministic stream RNG built on the SplitMix64 mixer.
//
// A stream is fully identified by (master_seed, stream_id): the same pair
// yields the same token stream on any thread count or platform. Substreams
// are derived with split(), so per-sample work never shares mutable state.
class Rng {
 public:
  Rng(uint64_t master_seed, uint64_t stream_id)
      : seed_(mix(mix(master_seed) ^ stream_id)), state_(seed_) {}

  // SplitMix64 step.
  uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix_final(state_);
  }

  // Unbiased integer in [lo, hi] via rejection sampling.
  uint64_t uniform_int(uint64_t lo, uint64_t hi) {
    uint64_t bound = hi - lo + 1;
    if (bound == 0) return next_u64();  // full 64-bit range
    uint64_t zone = (UINT64_MAX / bound) * bound;
    uint64_t r;
    do {
      r = next_u64();
    } while (r >= zone);
    return lo + r % bound;
  }

  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Fresh stream derived from this one's identity (not its position).
  Rng split(uint64_t substream) const { return Rng(seed_, substream + 0x6a09e667f3bcc909ULL); }

 private:
  static uint64_t mix(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    return mix_final(z);
  }
  static uint64_t mix_final(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  uint64_t seed_;
  uint64_t state_;
};

}  // namespace braidkc
