#include "fec/bcjr.hpp"

#include <algorithm>
#include <cmath>

#include "fec/errors.hpp"

namespace fec {

namespace {

// Log-domain zero that stays finite: -inf would turn normalization into
// NaN arithmetic, while -1e30 loses every max() it should lose and absorbs
// additions without overflow.
constexpr double kLogZero = -1e30;

inline double accumulate_log(double a, double b, bool exact) {
  const double hi = std::max(a, b);
  if (!exact) return hi;
  return hi + std::log1p(std::exp(-std::abs(a - b)));
}

}  // namespace

PosteriorLlrs bcjr_decode(const Trellis& trellis, const SoftWord& received,
                          bool terminated, BcjrVariant variant,
                          BcjrTrace* trace) {
  if (!terminated)
    throw UnterminatedBlock(
        "BCJR requires zero-tail terminated blocks; stream input is not "
        "supported");
  const int n = trellis.outputs_per_step;
  if (received.size() % static_cast<std::size_t>(n) != 0)
    throw LengthNotMultipleOfN("received length " +
                               std::to_string(received.size()) +
                               " is not a multiple of n=" + std::to_string(n));
  const std::size_t steps = received.size() / n;
  const std::size_t tail = static_cast<std::size_t>(trellis.memory());
  if (steps < tail + 1)
    throw BlockTooShort("terminated block carries no message bits");
  for (double v : received.llrs)
    if (!std::isfinite(v)) throw Error("SoftWord contains a non-finite LLR");

  const bool exact = variant == BcjrVariant::kLogMap;
  const std::uint32_t num_states = trellis.num_states;
  const std::uint32_t num_labels = 1u << n;

  // Branch correlations per step and label: 0.5 * sum (+/-1) * llr.
  std::vector<double> corr(steps * num_labels);
  for (std::size_t step = 0; step < steps; ++step) {
    for (std::uint32_t label = 0; label < num_labels; ++label) {
      double c = 0.0;
      for (int j = 0; j < n; ++j) {
        const double llr = received.llrs[step * n + j];
        c += ((label >> (n - 1 - j)) & 1) ? -0.5 * llr : 0.5 * llr;
      }
      corr[step * num_labels + label] = c;
    }
  }

  std::vector<double> alpha((steps + 1) * num_states, kLogZero);
  std::vector<double> beta((steps + 1) * num_states, kLogZero);
  alpha[0] = 0.0;
  beta[steps * num_states + 0] = 0.0;

  for (std::size_t step = 0; step < steps; ++step) {
    const double* a = alpha.data() + step * num_states;
    double* a_next = alpha.data() + (step + 1) * num_states;
    const double* c = corr.data() + step * num_labels;
    std::fill(a_next, a_next + num_states, kLogZero);
    for (std::uint32_t s = 0; s < num_states; ++s) {
      for (int input = 0; input < 2; ++input) {
        const std::uint32_t ns = trellis.next(s, input);
        const double m = a[s] + c[trellis.label(s, input)];
        a_next[ns] = accumulate_log(a_next[ns], m, exact);
      }
    }
    const double hi = *std::max_element(a_next, a_next + num_states);
    for (std::uint32_t s = 0; s < num_states; ++s) a_next[s] -= hi;
  }

  for (std::size_t step = steps; step-- > 0;) {
    const double* b_next = beta.data() + (step + 1) * num_states;
    double* b = beta.data() + step * num_states;
    const double* c = corr.data() + step * num_labels;
    std::fill(b, b + num_states, kLogZero);
    for (std::uint32_t s = 0; s < num_states; ++s) {
      for (int input = 0; input < 2; ++input) {
        const std::uint32_t ns = trellis.next(s, input);
        const double m = b_next[ns] + c[trellis.label(s, input)];
        b[s] = accumulate_log(b[s], m, exact);
      }
    }
    const double hi = *std::max_element(b, b + num_states);
    for (std::uint32_t s = 0; s < num_states; ++s) b[s] -= hi;
  }

  PosteriorLlrs posterior;
  posterior.variant = variant;
  posterior.llrs.resize(steps - tail);
  for (std::size_t step = 0; step < steps - tail; ++step) {
    const double* a = alpha.data() + step * num_states;
    const double* b_next = beta.data() + (step + 1) * num_states;
    const double* c = corr.data() + step * num_labels;
    double num0 = kLogZero, num1 = kLogZero;
    for (std::uint32_t s = 0; s < num_states; ++s) {
      const double m0 = a[s] + c[trellis.label(s, 0)] + b_next[trellis.next(s, 0)];
      const double m1 = a[s] + c[trellis.label(s, 1)] + b_next[trellis.next(s, 1)];
      num0 = accumulate_log(num0, m0, exact);
      num1 = accumulate_log(num1, m1, exact);
    }
    posterior.llrs[step] = num0 - num1;
  }

  if (trace) {
    trace->alpha = std::move(alpha);
    trace->beta = std::move(beta);
    trace->num_states = num_states;
  }
  return posterior;
}

}  // namespace fec
