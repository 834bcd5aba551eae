#pragma once

#include <string>
#include <vector>

#include "fec/gf2poly.hpp"

namespace fec {

// One encoder tap pattern. Coefficient 0 multiplies the current input bit,
// coefficient i the input i steps in the past. The octal rendering packs
// coefficient 0 into the most significant bit of a K-bit word, so for K=3
// octal 7 taps the current, previous, and second-previous bits.
struct GeneratorPolynomial {
  int constraint_length = 0;
  unsigned taps = 0;  // bit (K-1-i) = coefficient i

  bool coefficient(int i) const {
    return (taps >> (constraint_length - 1 - i)) & 1u;
  }
  std::string octal() const;
  Gf2Poly to_poly() const;  // bit i of the result = coefficient i

  static GeneratorPolynomial from_octal(const std::string& text, int k);

  bool operator==(const GeneratorPolynomial&) const = default;
};

// A rate-1/n mother code: constraint length K (current bit plus K-1 memory
// cells), n output bits per input bit, one generator per output. Immutable
// after construction; safe to share across workers.
struct CodeSpec {
  int constraint_length = 0;  // K
  int outputs_per_step = 0;   // n
  std::vector<GeneratorPolynomial> generators;
  std::string id;

  int memory() const { return constraint_length - 1; }
  long num_states() const { return 1L << memory(); }
  double rate() const { return 1.0 / outputs_per_step; }
};

// Validates and builds a CodeSpec from octal generator strings.
// Throws OctalOverflow, DegenerateCode, TooFewGenerators, UnsupportedK.
CodeSpec make_code(int k, const std::vector<std::string>& generators_octal);

// Text form used by the CLI, CSV, and config files: "K:1/n:g1,g2,...",
// e.g. "7:1/2:171,133".
CodeSpec parse_code_string(const std::string& text);
std::string render_code_string(const CodeSpec& code);

struct CatastrophicReport {
  bool catastrophic = false;
  Gf2Poly common_factor;  // meaningful only when catastrophic
};

// Massey-Sain criterion for rate-1/n codes: catastrophic iff the GCD of the
// generator polynomials is not a pure power of D. The trellis module offers
// an independent detector (zero-weight cycle search); the two must agree.
CatastrophicReport is_catastrophic(const CodeSpec& code);

// Best-known rate-1/2 code per constraint length, K in 3..9. The table was
// produced by analysis::search_generators (exhaustive, ranked by free
// distance, then multiplicity, then octal order) and frozen here; a test
// re-runs the search and checks the table has not drifted.
CodeSpec default_code(int k);

}  // namespace fec
