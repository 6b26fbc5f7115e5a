#pragma once

// Pinned pseudo-random contract shared by every randomized operation.
//
// All randomness is derived from a 64-bit base seed through `mix`, a fixed
// function built from the SplitMix64 finalizer:
//
//   fmix(z):  z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
//             z ^= z >> 27; z *= 0x94D049BB133111EB;
//             z ^= z >> 31
//   mix(seed, tag, index) =
//       fmix(fmix(seed ^ (tag * 0x9E3779B97F4A7C15)) + index * 0xD1B54A32D192ED03)
//
// A stream (`Rng`) seeded with s yields fmix(s + k * 0x9E3779B97F4A7C15) for
// k = 1, 2, ... . Bounded integers use rejection sampling on the top bits and
// unit doubles use the top 53 bits, so results do not depend on the standard
// library's distribution implementations.

#include <cstdint>

namespace lcsparse {

using Seed = std::uint64_t;

/// Stream tags. Values are part of the reproducibility contract.
enum class Stream : std::uint64_t {
  graph = 1,
  planted_labels = 2,
  tables = 3,
  corruption = 4,
  subsample = 5,
  trial = 6,
  rounding = 7,
  random_labeling = 8,
  restart = 9,
  search = 10,
};

std::uint64_t fmix64(std::uint64_t z) noexcept;

std::uint64_t mix(Seed seed, std::uint64_t tag, std::uint64_t index) noexcept;

inline std::uint64_t mix(Seed seed, Stream tag, std::uint64_t index) noexcept {
  return mix(seed, static_cast<std::uint64_t>(tag), index);
}

/// Maps 64 random bits to a double in [0, 1).
double to_unit(std::uint64_t bits) noexcept;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) noexcept : state_(seed) {}
  Rng(Seed seed, Stream tag, std::uint64_t index = 0) noexcept : state_(mix(seed, tag, index)) {}

  std::uint64_t next() noexcept;
  double unit() noexcept { return to_unit(next()); }
  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept;
  bool bernoulli(double p) noexcept { return unit() < p; }

 private:
  std::uint64_t state_;
};

}  // namespace lcsparse
