#pragma once

#include <vector>

#include "fec/code_spec.hpp"
#include "fec/trellis.hpp"

namespace fec {

// Distance diagnostics of a code. d_free is exact (uniform-cost search over
// detours from state 0 back to state 0); the spectrum counts detours per
// output weight from d_free up to d_free + spectrum_window, truncated at
// detours longer than search_depth_used steps.
struct DistanceReport {
  int d_free = 0;
  std::vector<long long> spectrum;  // index i = count at weight d_free + i
  int spectrum_window = 0;
  int search_depth_used = 0;
};

// Throws CatastrophicCode when the trellis has a zero-weight cycle through
// nonzero states (the search would not terminate below any finite weight).
DistanceReport free_distance(const Trellis& trellis);
DistanceReport free_distance(const Trellis& trellis, int spectrum_window,
                             int max_detour_steps);

struct ComplexityProfile {
  int constraint_length = 0;
  long long states = 0;             // 2^(K-1)
  long long branches_per_step = 0;  // 2^K
  long long survivors_per_step = 0; // one per state
};

ComplexityProfile complexity_profile(const CodeSpec& code);

enum class SearchObjective { kMaxFreeDistance };

struct SearchResult {
  CodeSpec code;
  DistanceReport report;
};

struct GeneratorSearchOutcome {
  std::vector<SearchResult> ranked;
  long long catastrophic_excluded = 0;
  long long pairs_considered = 0;
};

// Exhaustive rate-1/2 generator search for one constraint length. Only
// generators with both end taps set are enumerated (anything else has a
// smaller effective constraint length); catastrophic pairs are skipped.
// Ranking: d_free descending, then multiplicity at d_free ascending, then
// the canonical (larger, smaller) octal pair ascending. Spectra are only
// computed for the d_free classes that reach the returned prefix, so large
// searches stay fast. top_n = 0 returns every surviving pair.
// Throws SearchSpaceTooLarge for K > 9 or n != 2.
GeneratorSearchOutcome search_generators(int k, int n,
                                         SearchObjective objective,
                                         int top_n = 32);

}  // namespace fec
