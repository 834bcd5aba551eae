#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fec/trellis.hpp"

namespace fec {

// Received soft values as log-likelihood ratios, one per coded bit.
// Sign convention: positive means bit 0 is more likely. An LLR of exactly 0
// is an erasure and contributes nothing to any path metric; depuncturing
// inserts these at deleted positions.
struct SoftWord {
  std::vector<double> llrs;

  std::size_t size() const { return llrs.size(); }
};

struct DecodeResult {
  std::vector<std::uint8_t> decoded;  // tail stripped in terminated mode
  double final_metric = 0.0;          // Hamming distance (hard) or soft cost
  long long traceback_ties = 0;       // survivor-selection ties broken
};

// Maximum-likelihood sequence decoding, Hamming metric. Terminated mode
// pins both ends of the traceback to state 0 and strips the K-1 tail bits.
// Ties are broken toward the predecessor branch with input bit 0, then the
// lower-numbered state, so outputs are deterministic.
DecodeResult viterbi_decode_hard(const Trellis& trellis,
                                 std::span<const std::uint8_t> received,
                                 bool terminated);

// Soft-decision variant: minimizes the negative correlation between branch
// labels (mapped 0 -> +1, 1 -> -1) and the received LLRs, which is the
// maximum-likelihood metric for LLR inputs.
DecodeResult viterbi_decode_soft(const Trellis& trellis,
                                 const SoftWord& received, bool terminated);

// Sliding-window streaming decode: bit t is emitted after symbol t+window
// has been absorbed, by traceback from the best current state; the last
// `window` bits are flushed from the globally best path at stream end.
// Survivor memory is bounded by window * num_states. Throws WindowTooSmall
// for window < K.
std::vector<std::uint8_t> viterbi_decode_stream(const Trellis& trellis,
                                                const SoftWord& received,
                                                int window);

}  // namespace fec
