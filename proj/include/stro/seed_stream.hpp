#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace stro {

namespace detail {

// Philox4x32-10 block function. Counter-based: the value at a given
// (counter, key) never depends on generator state, so substreams can be
// replayed from any position.
inline std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                               std::array<std::uint32_t, 2> key) {
  constexpr std::uint32_t kMul0 = 0xD2511F53u;
  constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
  for (int round = 0; round < 10; ++round) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * ctr[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * ctr[2];
    const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
    const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kWeyl0;
    key[1] += kWeyl1;
  }
  return ctr;
}

}  // namespace detail

// One reproducible stream of draws, keyed by (base seed, substream index).
// The cursor counts consumed 128-bit blocks; identical (seed, substream,
// cursor) triples yield bit-identical draws on any platform or thread.
class SeedStream {
 public:
  SeedStream() = default;
  SeedStream(std::uint64_t base_seed, std::uint64_t substream)
      : base_(base_seed), substream_(substream) {}

  std::uint64_t base_seed() const { return base_; }
  std::uint64_t substream() const { return substream_; }
  std::uint64_t cursor() const { return cursor_; }

  std::uint64_t next_u64() {
    const std::array<std::uint32_t, 4> ctr = {
        static_cast<std::uint32_t>(cursor_), static_cast<std::uint32_t>(cursor_ >> 32),
        static_cast<std::uint32_t>(substream_), static_cast<std::uint32_t>(substream_ >> 32)};
    const std::array<std::uint32_t, 2> key = {static_cast<std::uint32_t>(base_),
                                              static_cast<std::uint32_t>(base_ >> 32)};
    ++cursor_;
    const auto out = detail::philox4x32(ctr, key);
    return (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
  }

  // Uniform draw in [0, 1) with 53 random bits.
  double next_uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller; consumes exactly two blocks per draw.
  double next_normal() {
    const double u1 = 1.0 - next_uniform();  // (0, 1], keeps log finite
    const double u2 = next_uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::uint64_t base_ = 0;
  std::uint64_t substream_ = 0;
  std::uint64_t cursor_ = 0;
};

// Hands out consecutive substreams of a shared base seed. Each design-point
// visit takes one substream, so runs with equal seeds see equal draws at
// equal visit positions regardless of thread scheduling.
class SeedStreamAllocator {
 public:
  SeedStreamAllocator() = default;
  explicit SeedStreamAllocator(std::uint64_t base_seed, std::uint64_t first_substream = 0)
      : base_(base_seed), next_(first_substream) {}

  std::uint64_t base_seed() const { return base_; }

  SeedStream next() { return SeedStream(base_, next_++); }

 private:
  std::uint64_t base_ = 0;
  std::uint64_t next_ = 0;
};

}  // namespace stro
