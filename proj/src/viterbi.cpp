#include "fec/viterbi.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>

#include "fec/errors.hpp"

namespace fec {

namespace {

constexpr std::int64_t kHardInf = std::numeric_limits<std::int64_t>::max() / 4;
constexpr double kSoftInf = std::numeric_limits<double>::max() / 4;

void check_lengths(const Trellis& t, std::size_t received_bits,
                   bool terminated) {
  const std::size_t n = static_cast<std::size_t>(t.outputs_per_step);
  if (received_bits % n != 0)
    throw LengthNotMultipleOfN("received length " +
                               std::to_string(received_bits) +
                               " is not a multiple of n=" + std::to_string(n));
  const std::size_t steps = received_bits / n;
  if (received_bits == 0)
    throw BlockTooShort("empty received sequence");
  if (terminated && steps < static_cast<std::size_t>(t.constraint_length - 1))
    throw BlockTooShort("terminated block shorter than the K-1 tail");
}

// Shared survivor machinery: the metric type and per-step branch costs are
// the only difference between the hard and soft paths.
template <typename Metric, typename StepCosts>
DecodeResult run_block_decode(const Trellis& t, std::size_t steps,
                              bool terminated, Metric inf,
                              StepCosts&& branch_costs) {
  const std::uint32_t num_states = t.num_states;
  std::vector<Metric> cur(num_states, inf), nxt(num_states);
  cur[0] = Metric{};  // encoder starts in state 0
  std::vector<std::uint8_t> choice(steps * num_states);
  Metric offset_total{};
  long long ties = 0;

  std::vector<Metric> cost(1u << t.outputs_per_step);
  for (std::size_t step = 0; step < steps; ++step) {
    branch_costs(step, cost);
    std::uint8_t* step_choice = choice.data() + step * num_states;
    for (std::uint32_t ns = 0; ns < num_states; ++ns) {
      const auto& pred = t.predecessors[ns];
      const Metric m0 =
          cur[pred[0].state] +
          cost[t.label(pred[0].state, pred[0].input)];
      const Metric m1 =
          cur[pred[1].state] +
          cost[t.label(pred[1].state, pred[1].input)];
      // Predecessors are ordered by (input, state); on a tie index 0 wins.
      if (m1 < m0) {
        nxt[ns] = m1;
        step_choice[ns] = 1;
      } else {
        if (m1 == m0 && m0 < inf / 2) ++ties;
        nxt[ns] = m0;
        step_choice[ns] = 0;
      }
    }
    // Renormalize so metrics stay bounded on arbitrarily long blocks.
    const Metric low = *std::min_element(nxt.begin(), nxt.end());
    for (auto& m : nxt) m -= low;
    offset_total += low;
    cur.swap(nxt);
  }

  std::uint32_t state = 0;
  if (!terminated) {
    Metric best = cur[0];
    for (std::uint32_t s = 1; s < num_states; ++s) {
      if (cur[s] < best) {
        best = cur[s];
        state = s;
      } else if (cur[s] == best) {
        ++ties;  // lower-numbered state kept
      }
    }
  }

  DecodeResult result;
  result.final_metric = static_cast<double>(cur[state] + offset_total);
  result.traceback_ties = ties;
  std::vector<std::uint8_t> path(steps);
  for (std::size_t step = steps; step-- > 0;) {
    path[step] = static_cast<std::uint8_t>(t.input_of(state));
    state = t.predecessors[state][choice[step * num_states + state]].state;
  }
  const std::size_t tail =
      terminated ? static_cast<std::size_t>(t.constraint_length - 1) : 0;
  path.resize(steps - tail);
  result.decoded = std::move(path);
  return result;
}

}  // namespace

DecodeResult viterbi_decode_hard(const Trellis& trellis,
                                 std::span<const std::uint8_t> received,
                                 bool terminated) {
  check_lengths(trellis, received.size(), terminated);
  const int n = trellis.outputs_per_step;
  const std::size_t steps = received.size() / n;

  return run_block_decode(
      trellis, steps, terminated, kHardInf,
      [&](std::size_t step, std::vector<std::int64_t>& cost) {
        std::uint32_t word = 0;
        for (int j = 0; j < n; ++j)
          word = (word << 1) | (received[step * n + j] & 1);
        for (std::uint32_t label = 0; label < cost.size(); ++label)
          cost[label] = __builtin_popcount(label ^ word);
      });
}

namespace {

// cost(label) = sum over label bits of (bit ? +llr : -llr); minimizing this
// maximizes the correlation with the +1/-1 mapped labels. Zero LLRs
// (erasures) drop out of every branch equally.
void soft_label_costs(const double* llrs, int n, std::vector<double>& cost) {
  cost.assign(cost.size(), 0.0);
  for (int j = 0; j < n; ++j) {
    const double llr = llrs[j];
    const std::uint32_t bit_mask = 1u << (n - 1 - j);
    for (std::uint32_t label = 0; label < cost.size(); ++label)
      cost[label] += (label & bit_mask) ? llr : -llr;
  }
}

void check_finite(const SoftWord& word) {
  for (double v : word.llrs)
    if (!std::isfinite(v))
      throw Error("SoftWord contains a non-finite LLR");
}

}  // namespace

DecodeResult viterbi_decode_soft(const Trellis& trellis,
                                 const SoftWord& received, bool terminated) {
  check_lengths(trellis, received.size(), terminated);
  check_finite(received);
  const int n = trellis.outputs_per_step;
  const std::size_t steps = received.size() / n;

  return run_block_decode(
      trellis, steps, terminated, kSoftInf,
      [&](std::size_t step, std::vector<double>& cost) {
        soft_label_costs(received.llrs.data() + step * n, n, cost);
      });
}

std::vector<std::uint8_t> viterbi_decode_stream(const Trellis& trellis,
                                                const SoftWord& received,
                                                int window) {
  if (window < trellis.constraint_length)
    throw WindowTooSmall("window " + std::to_string(window) +
                         " below constraint length " +
                         std::to_string(trellis.constraint_length));
  check_lengths(trellis, received.size(), /*terminated=*/false);
  check_finite(received);

  const int n = trellis.outputs_per_step;
  const std::size_t steps = received.size() / n;
  const std::uint32_t num_states = trellis.num_states;
  const std::size_t ring = static_cast<std::size_t>(window);

  std::vector<double> cur(num_states, kSoftInf), nxt(num_states);
  cur[0] = 0.0;
  std::vector<std::uint8_t> choice(ring * num_states);
  std::vector<double> cost(1u << n);
  std::vector<std::uint8_t> out;
  out.reserve(steps);

  auto traceback_state = [&](std::size_t from_step, std::size_t depth,
                             std::uint32_t state) {
    for (std::size_t i = 0; i < depth; ++i) {
      const std::size_t row = (from_step - i) % ring;
      state = trellis
                  .predecessors[state][choice[row * num_states + state]]
                  .state;
    }
    return state;
  };

  for (std::size_t step = 0; step < steps; ++step) {
    soft_label_costs(received.llrs.data() + step * n, n, cost);
    std::uint8_t* row = choice.data() + (step % ring) * num_states;
    for (std::uint32_t ns = 0; ns < num_states; ++ns) {
      const auto& pred = trellis.predecessors[ns];
      const double m0 =
          cur[pred[0].state] + cost[trellis.label(pred[0].state, pred[0].input)];
      const double m1 =
          cur[pred[1].state] + cost[trellis.label(pred[1].state, pred[1].input)];
      if (m1 < m0) {
        nxt[ns] = m1;
        row[ns] = 1;
      } else {
        nxt[ns] = m0;
        row[ns] = 0;
      }
    }
    const double low = *std::min_element(nxt.begin(), nxt.end());
    for (auto& m : nxt) m -= low;
    cur.swap(nxt);

    if (step + 1 > ring) {
      // Decision delay reached: emit the bit `window` steps back via
      // traceback from the currently best state.
      std::uint32_t best_state = static_cast<std::uint32_t>(
          std::min_element(cur.begin(), cur.end()) - cur.begin());
      const std::uint32_t past = traceback_state(step, ring, best_state);
      out.push_back(static_cast<std::uint8_t>(trellis.input_of(past)));
    }
  }

  // Flush the remaining bits from the global best final path.
  std::uint32_t best_state = static_cast<std::uint32_t>(
      std::min_element(cur.begin(), cur.end()) - cur.begin());
  const std::size_t emitted = out.size();
  std::vector<std::uint8_t> tail_bits(steps - emitted);
  std::uint32_t state = best_state;
  for (std::size_t i = steps; i-- > emitted;) {
    tail_bits[i - emitted] = static_cast<std::uint8_t>(trellis.input_of(state));
    state = trellis.predecessors[state][choice[(i % ring) * num_states + state]]
                .state;
  }
  out.insert(out.end(), tail_bits.begin(), tail_bits.end());
  return out;
}

}  // namespace fec
