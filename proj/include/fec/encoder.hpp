#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fec/code_spec.hpp"

namespace fec {

// Streaming shift-register encoder. Single-owner mutable; create one
// instance per worker.
class Encoder {
 public:
  explicit Encoder(CodeSpec code);

  // Appends the n output bits for one input bit (generator 0's bit first).
  void encode_bit(int input, std::vector<std::uint8_t>& out);

  // Appends K-1 zero flush steps; the register returns to all-zero.
  void terminate(std::vector<std::uint8_t>& out);

  void reset();
  std::uint32_t register_state() const { return register_; }
  long long bits_consumed() const { return bits_consumed_; }
  const CodeSpec& code() const { return code_; }

 private:
  CodeSpec code_;
  std::uint32_t register_ = 0;  // (u_{t-1}..u_{t-K+1}), most recent in MSB
  long long bits_consumed_ = 0;
};

// Encodes a whole message. With `terminated` set, K-1 zero flush bits are
// appended so the encoder ends in state 0; output length is then
// n*(len + K - 1) instead of n*len. Throws EmptyMessage.
std::vector<std::uint8_t> encode_block(const CodeSpec& code,
                                       std::span<const std::uint8_t> message,
                                       bool terminated);

}  // namespace fec
