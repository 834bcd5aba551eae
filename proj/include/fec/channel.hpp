#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fec/rng.hpp"
#include "fec/viterbi.hpp"

namespace fec {

enum class ChannelModel { kAwgn, kBsc, kGilbertElliott };

std::string channel_model_name(ChannelModel model);

struct GilbertElliottParams {
  double p_good_to_bad = 0.01;
  double p_bad_to_good = 0.2;
  double error_prob_good = 0.001;
  double error_prob_bad = 0.3;

  double stationary_bad() const {
    return p_good_to_bad / (p_good_to_bad + p_bad_to_good);
  }
};

// One channel operating point. ebno_db is the information-bit SNR; `rate`
// is the effective code rate after puncturing, so coded and uncoded curves
// are comparable at equal Eb/N0. All channels are pure functions of
// (input, config, seed).
struct ChannelConfig {
  ChannelModel model = ChannelModel::kAwgn;
  double ebno_db = 0.0;
  double rate = 1.0;
  std::uint64_t seed = 0;
  double bsc_p = 0.0;
  GilbertElliottParams ge;
};

// Noise variance for unit-energy BPSK: sigma^2 = 1 / (2 * rate * Eb/N0).
double noise_sigma_squared(double ebno_db, double rate);

// BPSK over AWGN: bit b maps to symbol 1-2b, Gaussian noise is added, and
// the channel LLR 2y/sigma^2 is emitted per bit.
SoftWord transmit_awgn(std::span<const std::uint8_t> bits,
                       const ChannelConfig& config);

// Binary symmetric channel; p must lie in [0, 0.5].
std::vector<std::uint8_t> transmit_bsc(std::span<const std::uint8_t> bits,
                                       double crossover_p, std::uint64_t seed);

struct GilbertElliottResult {
  std::vector<std::uint8_t> bits;
  std::vector<std::uint8_t> state_trace;  // 0 = good, 1 = bad, per bit
};

// Two-state Markov burst channel; starts in the good state, flips each bit
// with the current state's error probability, then advances the chain.
GilbertElliottResult transmit_gilbert_elliott(std::span<const std::uint8_t> bits,
                                              const ChannelConfig& config);

// Uniform-magnitude LLRs for hard channel outputs (BSC / Gilbert-Elliott),
// for feeding soft-input decoders: llr = (1-2b) * magnitude.
SoftWord hard_bits_to_llrs(std::span<const std::uint8_t> bits,
                           double magnitude);

// log((1-p)/p) clamped to 40 so p = 0 stays finite.
double bsc_llr_magnitude(double crossover_p);

// Tail probability of the standard normal, Q(x); uncoded BPSK over AWGN has
// bit error rate Q(sqrt(2 * Eb/N0)).
double q_function(double x);

}  // namespace fec
