#pragma once

#include <vector>

#include "fec/trellis.hpp"
#include "fec/viterbi.hpp"

namespace fec {

enum class BcjrVariant {
  kLogMap,     // exact jacobian-logarithm accumulation
  kMaxLogMap,  // plain max; decisions match the ML path
};

// Per-message-bit posterior LLRs; positive means bit 0 is more likely.
struct PosteriorLlrs {
  std::vector<double> llrs;
  BcjrVariant variant = BcjrVariant::kLogMap;
};

// Optional introspection of the forward/backward recursions, row-major
// [step][state] with steps+1 rows. Used by the numerical-stability tests.
struct BcjrTrace {
  std::vector<double> alpha;
  std::vector<double> beta;
  std::uint32_t num_states = 0;
};

// MAP (symbol-by-symbol) decoding over a zero-tail terminated block.
// Branch metrics are 0.5 * sum over label bits of (+llr for a 0 bit,
// -llr for a 1 bit); alpha/beta are normalized each step by their maximum,
// and both boundaries are pinned to state 0. Only terminated blocks are
// accepted; anything else throws UnterminatedBlock.
PosteriorLlrs bcjr_decode(const Trellis& trellis, const SoftWord& received,
                          bool terminated, BcjrVariant variant,
                          BcjrTrace* trace = nullptr);

}  // namespace fec
