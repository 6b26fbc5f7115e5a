#include "lcsparse/rng.hpp"

namespace lcsparse {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kIndexMul = 0xD1B54A32D192ED03ULL;
}  // namespace

std::uint64_t fmix64(std::uint64_t z) noexcept {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

std::uint64_t mix(Seed seed, std::uint64_t tag, std::uint64_t index) noexcept {
  return fmix64(fmix64(seed ^ (tag * kGolden)) + index * kIndexMul);
}

double to_unit(std::uint64_t bits) noexcept {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::next() noexcept {
  state_ += kGolden;
  return fmix64(state_);
}

std::uint64_t Rng::below(std::uint64_t bound) noexcept {
  // Smallest all-ones mask covering bound - 1, then reject out-of-range draws.
  std::uint64_t mask = bound - 1;
  mask |= mask >> 1;
  mask |= mask >> 2;
  mask |= mask >> 4;
  mask |= mask >> 8;
  mask |= mask >> 16;
  mask |= mask >> 32;
  for (;;) {
    const std::uint64_t x = next() & mask;
    if (x < bound) return x;
  }
}

}  // namespace lcsparse
