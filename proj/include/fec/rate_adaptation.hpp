#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fec/viterbi.hpp"

namespace fec {

// Periodic deletion pattern: n rows (one per generator output), P columns
// (one per input step); 1 = transmit, 0 = delete. Applied cyclically along
// the coded stream. Raises the rate from 1/n to P / popcount(matrix).
struct PunctureScheme {
  int outputs_per_step = 0;  // n
  int period = 0;            // P
  std::vector<std::uint8_t> keep;  // row-major, keep[row * period + col]

  bool kept(int row, int col) const { return keep[row * period + col] != 0; }
  int ones() const;
  int ones_in_column(int col) const;
  double rate() const { return static_cast<double>(period) / ones(); }

  // Text form "110/101": rows separated by '/', one digit per column.
  static PunctureScheme parse(const std::string& text);
  std::string to_string() const;

  void validate() const;  // every column keeps at least one bit
};

// Deletes the coded positions marked 0. Works on bits and on LLRs.
std::vector<std::uint8_t> puncture(std::span<const std::uint8_t> coded,
                                   const PunctureScheme& scheme);
std::vector<double> puncture(std::span<const double> coded,
                             const PunctureScheme& scheme);

// Reinserts erasures (LLR 0) at the deleted positions. `original_steps` is
// the pre-puncturing step count; the received length must equal the number
// of kept positions over those steps or LengthMismatch is thrown.
SoftWord depuncture(std::span<const double> received,
                    const PunctureScheme& scheme, long long original_steps);

// Block row-column interleaver: write row-major, read column-major, applied
// to consecutive rows*cols chunks. Burst errors that are adjacent on the
// channel end up at least `cols` positions apart after deinterleaving.
struct InterleaverSpec {
  int rows = 0;
  int cols = 0;

  long block_size() const { return static_cast<long>(rows) * cols; }
  static InterleaverSpec parse(const std::string& text);  // "16x16"
  void validate() const;                                  // rows, cols >= 2
};

std::vector<std::uint8_t> interleave(std::span<const std::uint8_t> data,
                                     const InterleaverSpec& spec);
std::vector<double> interleave(std::span<const double> data,
                               const InterleaverSpec& spec);
std::vector<std::uint8_t> deinterleave(std::span<const std::uint8_t> data,
                                       const InterleaverSpec& spec);
std::vector<double> deinterleave(std::span<const double> data,
                                 const InterleaverSpec& spec);

}  // namespace fec
