#pragma once

#include "ncpart/bigint.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace ncpart {

/// Deterministic 64-bit chunk source (std::mt19937_64, whose output sequence
/// is fixed by the standard) with unbiased draws below arbitrary-precision
/// bounds. Changing the engine or the chunk layout changes every seeded
/// sample and must bump the major version.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t position() const { return position_; }

  std::uint64_t next_chunk() {
    ++position_;
    return engine_();
  }

  /// Uniform integer in [0, bound). Draws the fewest 64-bit chunks covering
  /// the bit length of bound-1, least significant chunk first, masks the
  /// excess high bits and rejects values >= bound.
  BigCount uniform_below(const BigCount& bound) {
    if (bound <= 0) throw std::invalid_argument("uniform_below needs a positive bound");
    if (bound == 1) return 0;
    // Bit length of bound - 1.
    const unsigned high = static_cast<unsigned>(boost::multiprecision::msb(bound));
    const unsigned bits = boost::multiprecision::lsb(bound) == high ? high : high + 1;
    const unsigned chunks = (bits + 63) / 64;
    const unsigned spare = chunks * 64 - bits;
    if (chunks == 1) {
      const std::uint64_t limit = bound.convert_to<std::uint64_t>() - 1;
      while (true) {
        std::uint64_t value = next_chunk() >> spare;
        if (value <= limit) return value;
      }
    }
    scratch_.resize(chunks);
    BigCount value;
    while (true) {
      for (unsigned c = 0; c < chunks; ++c) scratch_[c] = next_chunk();
      scratch_.back() >>= spare;
      boost::multiprecision::import_bits(value, scratch_.rbegin(), scratch_.rend(), 64);
      if (value < bound) return value;
    }
  }

 private:
  std::uint64_t seed_;
  std::uint64_t position_ = 0;
  std::mt19937_64 engine_;
  std::vector<std::uint64_t> scratch_;
};

}  // namespace ncpart
