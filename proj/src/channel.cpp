#include "fec/channel.hpp"

#include <algorithm>
#include <cmath>

#include "fec/errors.hpp"

namespace fec {

std::string channel_model_name(ChannelModel model) {
  switch (model) {
    case ChannelModel::kAwgn: return "awgn";
    case ChannelModel::kBsc: return "bsc";
    case ChannelModel::kGilbertElliott: return "ge";
  }
  return "?";
}

double noise_sigma_squared(double ebno_db, double rate) {
  if (rate <= 0.0 || rate > 1.0)
    throw Error("code rate must lie in (0, 1], got " + std::to_string(rate));
  const double ebno_linear = std::pow(10.0, ebno_db / 10.0);
  return 1.0 / (2.0 * rate * ebno_linear);
}

SoftWord transmit_awgn(std::span<const std::uint8_t> bits,
                       const ChannelConfig& config) {
  const double sigma2 = noise_sigma_squared(config.ebno_db, config.rate);
  const double sigma = std::sqrt(sigma2);
  const double scale = 2.0 / sigma2;
  Rng rng(config.seed);
  SoftWord word;
  word.llrs.reserve(bits.size());
  for (std::uint8_t b : bits) {
    const double symbol = (b & 1) ? -1.0 : 1.0;
    const double y = symbol + sigma * rng.next_gaussian();
    word.llrs.push_back(scale * y);
  }
  return word;
}

std::vector<std::uint8_t> transmit_bsc(std::span<const std::uint8_t> bits,
                                       double crossover_p,
                                       std::uint64_t seed) {
  if (!(crossover_p >= 0.0 && crossover_p <= 0.5))
    throw InvalidProbability("BSC crossover probability " +
                             std::to_string(crossover_p) +
                             " outside [0, 0.5]");
  Rng rng(seed);
  std::vector<std::uint8_t> out(bits.begin(), bits.end());
  for (auto& b : out)
    if (rng.next_bernoulli(crossover_p)) b ^= 1;
  return out;
}

GilbertElliottResult transmit_gilbert_elliott(std::span<const std::uint8_t> bits,
                                              const ChannelConfig& config) {
  const GilbertElliottParams& ge = config.ge;
  for (double p : {ge.p_good_to_bad, ge.p_bad_to_good, ge.error_prob_good,
                   ge.error_prob_bad})
    if (!(p >= 0.0 && p <= 1.0))
      throw InvalidProbability("Gilbert-Elliott parameter " +
                               std::to_string(p) + " outside [0, 1]");
  Rng rng(config.seed);
  GilbertElliottResult result;
  result.bits.assign(bits.begin(), bits.end());
  result.state_trace.resize(bits.size());
  int bad = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    result.state_trace[i] = static_cast<std::uint8_t>(bad);
    const double flip_p = bad ? ge.error_prob_bad : ge.error_prob_good;
    if (rng.next_bernoulli(flip_p)) result.bits[i] ^= 1;
    const double transition_p = bad ? ge.p_bad_to_good : ge.p_good_to_bad;
    if (rng.next_bernoulli(transition_p)) bad ^= 1;
  }
  return result;
}

SoftWord hard_bits_to_llrs(std::span<const std::uint8_t> bits,
                           double magnitude) {
  SoftWord word;
  word.llrs.reserve(bits.size());
  for (std::uint8_t b : bits)
    word.llrs.push_back((b & 1) ? -magnitude : magnitude);
  return word;
}

double bsc_llr_magnitude(double crossover_p) {
  if (crossover_p <= 0.0) return 40.0;
  return std::min(40.0, std::log((1.0 - crossover_p) / crossover_p));
}

double q_function(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

}  // namespace fec
