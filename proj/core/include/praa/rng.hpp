#pragma once

#include <array>
#include <cstdint>

namespace praa::rng {

// Philox4x32-10 counter-based generator (Salmon et al., "Parallel random
// numbers: as easy as 1, 2, 3"). Bit-exact across platforms: the key is the
// 64-bit seed, the 128-bit counter is (block_lo, block_hi, stream_lo,
// stream_hi). Distinct stream ids give statistically independent sequences,
// which is how parallel sampling stays deterministic under any scheduling.
class Philox {
 public:
  explicit Philox(std::uint64_t seed, std::uint64_t stream = 0)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
        stream_lo_(static_cast<std::uint32_t>(stream)),
        stream_hi_(static_cast<std::uint32_t>(stream >> 32)) {}

  std::uint32_t next_u32() {
    if (pos_ == 4) refill();
    return buf_[pos_++];
  }

  std::uint64_t next_u64() {
    std::uint64_t lo = next_u32();
    return lo | (static_cast<std::uint64_t>(next_u32()) << 32);
  }

  // Unbiased uniform draw from {0,...,n-1} by rejection.
  std::uint32_t uniform_below(std::uint32_t n) {
    if (n == 0) return 0;
    const std::uint32_t min = (-n) % n;  // 2^32 mod n
    for (;;) {
      std::uint32_t r = next_u32();
      if (r >= min) return r % n;
    }
  }

  // Exact probability-1/2 coin.
  bool coin() { return next_u32() & 1u; }

  // Raw block function, exposed for the known-answer tests.
  static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                            std::array<std::uint32_t, 2> key);

 private:
  void refill() {
    auto out = block({block_lo_, block_hi_, stream_lo_, stream_hi_}, key_);
    for (int i = 0; i < 4; ++i) buf_[i] = out[i];
    pos_ = 0;
    if (++block_lo_ == 0) ++block_hi_;
  }

  std::array<std::uint32_t, 2> key_;
  std::uint32_t stream_lo_, stream_hi_;
  std::uint32_t block_lo_ = 0, block_hi_ = 0;
  std::array<std::uint32_t, 4> buf_{};
  int pos_ = 4;
};

}  // namespace praa::rng
