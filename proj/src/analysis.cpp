#include "fec/analysis.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "fec/errors.hpp"

namespace fec {

namespace {

// Minimum-weight detour via Dijkstra: leave state 0 (forced input 1), move
// through nonzero states, return to 0. Branch cost = output Hamming weight.
int min_detour_weight(const Trellis& t) {
  using Item = std::pair<int, std::uint32_t>;  // (weight, state)
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  std::vector<int> dist(t.num_states, -1);
  int best = -1;

  queue.emplace(t.label_weight(0, 1), t.next(0, 1));
  while (!queue.empty()) {
    auto [w, s] = queue.top();
    queue.pop();
    if (best >= 0 && w >= best) break;
    if (dist[s] >= 0 && dist[s] <= w) continue;
    dist[s] = w;
    for (int input = 0; input < 2; ++input) {
      const std::uint32_t ns = t.next(s, input);
      const int nw = w + t.label_weight(s, input);
      if (ns == 0) {
        if (best < 0 || nw < best) best = nw;
      } else if (dist[ns] < 0 || dist[ns] > nw) {
        queue.emplace(nw, ns);
      }
    }
  }
  return best;
}

// Counts detours by weight in [d_free, d_free + window] with a path-length
// cap; rolling DP over (state, accumulated weight).
std::vector<long long> count_spectrum(const Trellis& t, int d_free, int window,
                                      int max_steps) {
  const int max_weight = d_free + window;
  const std::uint32_t num_states = t.num_states;
  std::vector<long long> counts(window + 1, 0);
  std::vector<long long> cur(num_states * (max_weight + 1), 0);
  std::vector<long long> nxt(cur.size());

  auto at = [&](std::vector<long long>& v, std::uint32_t s, int w) -> long long& {
    return v[s * (max_weight + 1) + w];
  };

  {
    const int w0 = t.label_weight(0, 1);
    if (w0 <= max_weight) at(cur, t.next(0, 1), w0) = 1;
  }
  for (int step = 1; step < max_steps; ++step) {
    std::fill(nxt.begin(), nxt.end(), 0);
    bool alive = false;
    for (std::uint32_t s = 1; s < num_states; ++s) {
      for (int w = 0; w <= max_weight; ++w) {
        const long long c = at(cur, s, w);
        if (c == 0) continue;
        for (int input = 0; input < 2; ++input) {
          const int nw = w + t.label_weight(s, input);
          if (nw > max_weight) continue;
          const std::uint32_t ns = t.next(s, input);
          if (ns == 0) {
            if (nw >= d_free) counts[nw - d_free] += c;
          } else {
            at(nxt, ns, nw) += c;
            alive = true;
          }
        }
      }
    }
    cur.swap(nxt);
    if (!alive) break;
  }
  return counts;
}

}  // namespace

DistanceReport free_distance(const Trellis& trellis) {
  return free_distance(trellis, 4, 20 * trellis.constraint_length);
}

DistanceReport free_distance(const Trellis& trellis, int spectrum_window,
                             int max_detour_steps) {
  if (zero_weight_cycle_exists(trellis))
    throw CatastrophicCode(
        "free distance is undefined for catastrophic codes (zero-weight "
        "cycle present)");
  DistanceReport report;
  report.d_free = min_detour_weight(trellis);
  report.spectrum_window = spectrum_window;
  report.search_depth_used = max_detour_steps;
  report.spectrum = count_spectrum(trellis, report.d_free, spectrum_window,
                                   max_detour_steps);
  return report;
}

ComplexityProfile complexity_profile(const CodeSpec& code) {
  ComplexityProfile profile;
  profile.constraint_length = code.constraint_length;
  profile.states = 1LL << (code.constraint_length - 1);
  profile.branches_per_step = 2 * profile.states;
  profile.survivors_per_step = profile.states;
  return profile;
}

GeneratorSearchOutcome search_generators(int k, int n,
                                         SearchObjective objective,
                                         int top_n) {
  (void)objective;  // kMaxFreeDistance is the only objective
  if (n != 2)
    throw SearchSpaceTooLarge("exhaustive search supports rate 1/2 only");
  if (k < 2 || k > 9)
    throw SearchSpaceTooLarge("exhaustive search supports K in 2..9, got " +
                              std::to_string(k));

  // Candidate generators: current-input tap and oldest tap both set.
  const unsigned lo_bit = 1u;
  const unsigned hi_bit = 1u << (k - 1);
  std::vector<unsigned> taps;
  for (unsigned v = 0; v < (1u << k); ++v)
    if ((v & lo_bit) && (v & hi_bit)) taps.push_back(v);

  GeneratorSearchOutcome outcome;
  struct Candidate {
    unsigned hi, lo;
    int d_free;
  };
  std::map<int, std::vector<Candidate>, std::greater<>> by_distance;

  for (std::size_t i = 0; i < taps.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const unsigned hi = taps[i];
      const unsigned lo = taps[j];
      ++outcome.pairs_considered;
      const Gf2Poly gcd =
          gf2_poly_gcd(GeneratorPolynomial{k, hi}.to_poly(),
                       GeneratorPolynomial{k, lo}.to_poly());
      if (!gcd.is_power_of_d()) {
        ++outcome.catastrophic_excluded;
        continue;
      }
      CodeSpec code = make_code(
          k, {GeneratorPolynomial{k, hi}.octal(), GeneratorPolynomial{k, lo}.octal()});
      const Trellis trellis = build_trellis(code);
      const int d = min_detour_weight(trellis);
      by_distance[d].push_back({hi, lo, d});
    }
  }

  const std::size_t want =
      top_n <= 0 ? outcome.pairs_considered - outcome.catastrophic_excluded
                 : static_cast<std::size_t>(top_n);
  for (auto& [d, members] : by_distance) {
    if (outcome.ranked.size() >= want) break;
    struct Scored {
      Candidate candidate;
      DistanceReport report;
    };
    std::vector<Scored> scored;
    scored.reserve(members.size());
    for (const Candidate& c : members) {
      CodeSpec code = make_code(k, {GeneratorPolynomial{k, c.hi}.octal(),
                                    GeneratorPolynomial{k, c.lo}.octal()});
      scored.push_back({c, free_distance(build_trellis(code))});
    }
    std::sort(scored.begin(), scored.end(),
              [](const Scored& a, const Scored& b) {
                if (a.report.spectrum[0] != b.report.spectrum[0])
                  return a.report.spectrum[0] < b.report.spectrum[0];
                if (a.candidate.hi != b.candidate.hi)
                  return a.candidate.hi < b.candidate.hi;
                return a.candidate.lo < b.candidate.lo;
              });
    for (auto& s : scored) {
      if (outcome.ranked.size() >= want) break;
      outcome.ranked.push_back(
          {make_code(k, {GeneratorPolynomial{k, s.candidate.hi}.octal(),
                         GeneratorPolynomial{k, s.candidate.lo}.octal()}),
           std::move(s.report)});
    }
  }
  return outcome;
}

}  // namespace fec
