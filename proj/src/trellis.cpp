#include "fec/trellis.hpp"

#include <ostream>

#include "fec/bits.hpp"
#include "fec/errors.hpp"

namespace fec {

Trellis build_trellis(const CodeSpec& code) {
  const int k = code.constraint_length;
  if (k > 16)
    throw StateSpaceTooLarge("trellis for K=" + std::to_string(k) +
                             " exceeds the 2^15 state bound");

  Trellis t;
  t.constraint_length = k;
  t.outputs_per_step = code.outputs_per_step;
  t.num_states = 1u << (k - 1);
  t.next_state.resize(t.num_states * 2);
  t.output_label.resize(t.num_states * 2);
  t.predecessors.resize(t.num_states);

  for (std::uint32_t state = 0; state < t.num_states; ++state) {
    for (int input = 0; input < 2; ++input) {
      const std::uint32_t window =
          (static_cast<std::uint32_t>(input) << (k - 1)) | state;
      std::uint32_t label = 0;
      for (int j = 0; j < code.outputs_per_step; ++j) {
        const int bit = parity_u32(window & code.generators[j].taps);
        label |= static_cast<std::uint32_t>(bit)
                 << (code.outputs_per_step - 1 - j);
      }
      const std::uint32_t ns =
          (static_cast<std::uint32_t>(input) << (k - 2)) | (state >> 1);
      t.next_state[state * 2 + input] = ns;
      t.output_label[state * 2 + input] = label;
    }
  }

  std::vector<int> filled(t.num_states, 0);
  for (std::uint32_t state = 0; state < t.num_states; ++state) {
    for (int input = 0; input < 2; ++input) {
      const std::uint32_t ns = t.next(state, input);
      t.predecessors[ns][filled[ns]++] = {state,
                                          static_cast<std::uint8_t>(input)};
    }
  }
  // States enumerated in increasing order and both branches from a state
  // share the input bit of their target, so each predecessor pair is already
  // sorted by (input, state).
  return t;
}

bool zero_weight_cycle_exists(const Trellis& trellis) {
  // Cycle detection restricted to zero-output-weight branches among nonzero
  // states: iteratively peel states with no remaining outgoing branch; a
  // nonempty residue is a cycle.
  const std::uint32_t n = trellis.num_states;
  std::vector<int> out_degree(n, 0);
  std::vector<std::vector<std::uint32_t>> rev(n);
  for (std::uint32_t s = 1; s < n; ++s) {
    for (int input = 0; input < 2; ++input) {
      const std::uint32_t ns = trellis.next(s, input);
      if (ns == 0 || trellis.label_weight(s, input) != 0) continue;
      ++out_degree[s];
      rev[ns].push_back(s);
    }
  }
  std::vector<std::uint32_t> worklist;
  for (std::uint32_t s = 1; s < n; ++s)
    if (out_degree[s] == 0) worklist.push_back(s);
  while (!worklist.empty()) {
    const std::uint32_t s = worklist.back();
    worklist.pop_back();
    for (std::uint32_t p : rev[s])
      if (--out_degree[p] == 0) worklist.push_back(p);
  }
  for (std::uint32_t s = 1; s < n; ++s)
    if (out_degree[s] > 0) return true;
  return false;
}

std::vector<std::uint8_t> trellis_walk(const Trellis& trellis,
                                       std::span<const std::uint8_t> inputs,
                                       std::uint32_t& state) {
  std::vector<std::uint8_t> out;
  out.reserve(inputs.size() * trellis.outputs_per_step);
  for (std::uint8_t bit : inputs) {
    const std::uint32_t label = trellis.label(state, bit & 1);
    for (int j = trellis.outputs_per_step - 1; j >= 0; --j)
      out.push_back(static_cast<std::uint8_t>((label >> j) & 1));
    state = trellis.next(state, bit & 1);
  }
  return out;
}

void dump_trellis(const Trellis& trellis, std::ostream& out) {
  out << "state,input,next_state,output_bits\n";
  for (std::uint32_t s = 0; s < trellis.num_states; ++s) {
    for (int input = 0; input < 2; ++input) {
      out << s << ',' << input << ',' << trellis.next(s, input) << ',';
      const std::uint32_t label = trellis.label(s, input);
      for (int j = trellis.outputs_per_step - 1; j >= 0; --j)
        out << ((label >> j) & 1);
      out << '\n';
    }
  }
}

}  // namespace fec
