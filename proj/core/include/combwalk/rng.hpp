#pragma once

#include <cstdint>

namespace combwalk {

/// Counter-based splittable uniform generator.
///
/// A stream is identified by (seed, stream_id); the i-th output is a pure
/// function of (seed, stream_id, i), so identical identifiers reproduce the
/// same draw sequence on every platform (only unsigned 64-bit arithmetic is
/// used). Distinct stream ids are treated as independent streams; substream()
/// derives further independent children, which is how replicas and the
/// S1/S2/G drivers of the coupling get their own generators.
///
/// The output function is the SplitMix64 finalizer over an additive
/// golden-ratio counter sequence, i.e. the generator behind Java's
/// SplittableRandom.
class RngStream {
 public:
  RngStream() : RngStream(0, 0) {}

  RngStream(std::uint64_t seed, std::uint64_t stream_id)
      : seed_(seed), stream_id_(stream_id), counter_(0) {
    base_ = mix(mix(seed + 0x6A09E667F3BCC909ULL) ^
                mix(stream_id + 0xBB67AE8584CAA73BULL));
  }

  std::uint64_t next_u64() {
    counter_ += 0x9E3779B97F4A7C15ULL;
    return mix(base_ + counter_);
  }

  /// Uniform double in [0,1) with 53 random bits.
  double next_u01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Independent child stream; deterministic in (seed, stream_id, id).
  RngStream substream(std::uint64_t id) const {
    RngStream child;
    child.seed_ = seed_;
    child.stream_id_ = stream_id_;
    child.base_ = mix(base_ ^ mix(id + 0x3C6EF372FE94F82BULL));
    child.counter_ = 0;
    return child;
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }
  std::uint64_t counter() const { return counter_; }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t base_ = 0;
  std::uint64_t counter_;
};

}  // namespace combwalk
