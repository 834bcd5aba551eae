#pragma once

#include <cstdint>
#include <iosfwd>

namespace fec {

// 16-byte container header for coded files:
//   offset 0..3   magic "CVK1"
//   offset 4      constraint length K
//   offset 5      outputs per step n
//   offset 6      terminated flag (0/1)
//   offset 7      reserved, 0
//   offset 8..15  message bit length, little-endian 64-bit
// The payload holds the coded bits packed MSB-first per byte, or 32-bit
// little-endian float LLRs when decoding soft input.
struct CodedFileHeader {
  std::uint8_t constraint_length = 0;
  std::uint8_t outputs_per_step = 0;
  bool terminated = true;
  std::uint64_t message_bits = 0;

  std::uint64_t coded_bits() const {
    return static_cast<std::uint64_t>(outputs_per_step) *
           (message_bits + (terminated ? constraint_length - 1 : 0));
  }
};

void write_coded_header(std::ostream& out, const CodedFileHeader& header);

// Throws fec::Error on bad magic or malformed header.
CodedFileHeader read_coded_header(std::istream& in);

}  // namespace fec
