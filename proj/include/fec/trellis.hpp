#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "fec/code_spec.hpp"

namespace fec {

// Precomputed state-transition graph of a CodeSpec. States encode the input
// history (u_{t-1}, ..., u_{t-K+1}) with the most recent bit in the most
// significant position, so next_state = (input << (K-2)) | (state >> 1).
// Output labels pack generator 0's bit into the MSB of an n-bit word.
// Immutable after build; shared read-only by all decoders.
struct Trellis {
  int constraint_length = 0;
  int outputs_per_step = 0;
  std::uint32_t num_states = 0;

  // Indexed by state*2 + input.
  std::vector<std::uint32_t> next_state;
  std::vector<std::uint32_t> output_label;

  struct Pred {
    std::uint32_t state;
    std::uint8_t input;
  };
  // Two predecessor branches per state, ordered by (input, state) so the
  // decoders' tie-break rule can simply prefer index 0.
  std::vector<std::array<Pred, 2>> predecessors;

  std::uint32_t next(std::uint32_t state, int input) const {
    return next_state[state * 2 + input];
  }
  std::uint32_t label(std::uint32_t state, int input) const {
    return output_label[state * 2 + input];
  }
  // The input bit that drove any branch into `state`.
  int input_of(std::uint32_t state) const {
    return static_cast<int>(state >> (constraint_length - 2)) & 1;
  }
  int label_weight(std::uint32_t state, int input) const {
    return __builtin_popcount(label(state, input));
  }
};

// Throws StateSpaceTooLarge for K > 16.
Trellis build_trellis(const CodeSpec& code);

// Second, trellis-level catastrophic detector: true iff some cycle that
// avoids state 0 has total output Hamming weight 0.
bool zero_weight_cycle_exists(const Trellis& trellis);

// Replays an input sequence through the branch table; used to cross-check
// the shift-register encoder. `state` is updated in place.
std::vector<std::uint8_t> trellis_walk(const Trellis& trellis,
                                       std::span<const std::uint8_t> inputs,
                                       std::uint32_t& state);

// Plain-text debug table, one "state,input,next_state,output_bits" per line.
void dump_trellis(const Trellis& trellis, std::ostream& out);

}  // namespace fec
