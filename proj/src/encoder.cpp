#include "fec/encoder.hpp"

#include <utility>

#include "fec/bits.hpp"
#include "fec/errors.hpp"

namespace fec {

Encoder::Encoder(CodeSpec code) : code_(std::move(code)) {}

void Encoder::encode_bit(int input, std::vector<std::uint8_t>& out) {
  const int k = code_.constraint_length;
  const std::uint32_t window =
      (static_cast<std::uint32_t>(input & 1) << (k - 1)) | register_;
  for (const auto& g : code_.generators)
    out.push_back(static_cast<std::uint8_t>(parity_u32(window & g.taps)));
  register_ = (static_cast<std::uint32_t>(input & 1) << (k - 2)) |
              (register_ >> 1);
  ++bits_consumed_;
}

void Encoder::terminate(std::vector<std::uint8_t>& out) {
  for (int i = 0; i < code_.memory(); ++i) encode_bit(0, out);
}

void Encoder::reset() {
  register_ = 0;
  bits_consumed_ = 0;
}

std::vector<std::uint8_t> encode_block(const CodeSpec& code,
                                       std::span<const std::uint8_t> message,
                                       bool terminated) {
  if (message.empty()) throw EmptyMessage("cannot encode an empty message");
  Encoder enc(code);
  std::vector<std::uint8_t> out;
  out.reserve(code.outputs_per_step *
              (message.size() + (terminated ? code.memory() : 0)));
  for (std::uint8_t bit : message) enc.encode_bit(bit, out);
  if (terminated) enc.terminate(out);
  return out;
}

}  // namespace fec
