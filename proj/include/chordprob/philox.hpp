#pragma once

// Philox4x32-10 counter-based generator (Salmon et al., SC'11). Output block
// i is a pure function of (key, counter), so any sample can be generated
// independently of every other one.

#include <array>
#include <cstdint>

namespace chordprob {

using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

PhiloxCounter philox4x32_10(PhiloxCounter counter, PhiloxKey key);

inline PhiloxKey philox_key(std::uint64_t seed) {
  return {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
}

/// Uniform double in [0, 1) from the top 53 bits of (hi:lo).
inline double to_unit_interval(std::uint32_t hi, std::uint32_t lo) {
  const std::uint64_t bits = (static_cast<std::uint64_t>(hi) << 32) | lo;
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace chordprob
