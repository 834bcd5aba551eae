#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace fec {

// Bits travel through the toolkit as one value (0/1) per byte; packing is
// only used at file boundaries (MSB-first within each byte).

std::vector<std::uint8_t> pack_bits(std::span<const std::uint8_t> bits);
std::vector<std::uint8_t> unpack_bits(std::span<const std::uint8_t> bytes,
                                      std::size_t bit_count);

std::size_t hamming_distance(std::span<const std::uint8_t> a,
                             std::span<const std::uint8_t> b);

inline int parity_u32(std::uint32_t x) { return __builtin_parity(x); }

}  // namespace fec
