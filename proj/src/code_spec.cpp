#include "fec/code_spec.hpp"

#include <array>
#include <cstdlib>
#include <sstream>

#include "fec/errors.hpp"

namespace fec {

std::string GeneratorPolynomial::octal() const {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%o", taps);
  return buf;
}

Gf2Poly GeneratorPolynomial::to_poly() const {
  std::uint64_t bits = 0;
  for (int i = 0; i < constraint_length; ++i)
    if (coefficient(i)) bits |= 1ULL << i;
  return Gf2Poly(bits);
}

GeneratorPolynomial GeneratorPolynomial::from_octal(const std::string& text,
                                                    int k) {
  if (text.empty()) throw OctalOverflow("empty generator");
  unsigned long value = 0;
  for (char c : text) {
    if (c < '0' || c > '7')
      throw OctalOverflow("invalid octal digit in generator '" + text + "'");
    value = value * 8 + static_cast<unsigned long>(c - '0');
    if (value >= (1UL << 24))
      throw OctalOverflow("generator '" + text + "' out of range");
  }
  if (value >= (1UL << k))
    throw OctalOverflow("generator '" + text + "' needs more than " +
                        std::to_string(k) + " bits");
  return GeneratorPolynomial{k, static_cast<unsigned>(value)};
}

CodeSpec make_code(int k, const std::vector<std::string>& generators_octal) {
  if (k < 2 || k > 16)
    throw UnsupportedK("constraint length " + std::to_string(k) +
                       " outside supported range [2, 16]");
  if (generators_octal.size() < 2)
    throw TooFewGenerators("a code needs at least 2 generators");

  CodeSpec code;
  code.constraint_length = k;
  code.outputs_per_step = static_cast<int>(generators_octal.size());
  bool any_current = false;
  bool any_oldest = false;
  for (const std::string& text : generators_octal) {
    GeneratorPolynomial g = GeneratorPolynomial::from_octal(text, k);
    any_current = any_current || g.coefficient(0);
    any_oldest = any_oldest || g.coefficient(k - 1);
    code.generators.push_back(g);
  }
  if (!any_current || !any_oldest)
    throw DegenerateCode(
        "effective constraint length is smaller than K: every generator "
        "misses the " +
        std::string(any_current ? "oldest" : "current") + " tap");

  std::string ids;
  for (const auto& g : code.generators) {
    if (!ids.empty()) ids += ",";
    ids += g.octal();
  }
  code.id = "K" + std::to_string(k) + "-(" + ids + ")";
  return code;
}

CodeSpec parse_code_string(const std::string& text) {
  std::istringstream in(text);
  std::string k_part, rate_part, gens_part;
  if (!std::getline(in, k_part, ':') || !std::getline(in, rate_part, ':') ||
      !std::getline(in, gens_part))
    throw Error("bad code string '" + text + "', expected K:1/n:g1,g2,...");

  int k = 0;
  try {
    std::size_t pos = 0;
    k = std::stoi(k_part, &pos);
    if (pos != k_part.size()) throw std::invalid_argument(k_part);
  } catch (const std::exception&) {
    throw Error("bad constraint length '" + k_part + "' in code string");
  }

  std::vector<std::string> gens;
  std::istringstream gin(gens_part);
  std::string tok;
  while (std::getline(gin, tok, ',')) gens.push_back(tok);

  const std::string expected_rate = "1/" + std::to_string(gens.size());
  if (rate_part != expected_rate)
    throw Error("rate '" + rate_part + "' does not match " +
                std::to_string(gens.size()) + " generators (expected " +
                expected_rate + ")");
  return make_code(k, gens);
}

std::string render_code_string(const CodeSpec& code) {
  std::string out = std::to_string(code.constraint_length) + ":1/" +
                    std::to_string(code.outputs_per_step) + ":";
  for (std::size_t i = 0; i < code.generators.size(); ++i) {
    if (i) out += ",";
    out += code.generators[i].octal();
  }
  return out;
}

CatastrophicReport is_catastrophic(const CodeSpec& code) {
  Gf2Poly g = code.generators.front().to_poly();
  for (std::size_t i = 1; i < code.generators.size(); ++i) {
    Gf2Poly next = code.generators[i].to_poly();
    if (g.is_zero() && next.is_zero()) continue;
    if (g.is_zero())
      g = next;
    else if (!next.is_zero())
      g = gf2_poly_gcd(g, next);
  }
  CatastrophicReport report;
  report.common_factor = g;
  report.catastrophic = !g.is_power_of_d();
  return report;
}

namespace {

// Frozen output of search_generators(K, 2) for K = 3..9: the top-ranked
// non-catastrophic rate-1/2 pair per constraint length. Regenerate with
// `fectool search --k <K>`; fec_analysis_tests checks for drift.
struct RegistryEntry {
  int k;
  const char* g1;
  const char* g2;
};
constexpr std::array<RegistryEntry, 7> kDefaultCodes{{
    {3, "7", "5"},
    {4, "17", "13"},
    {5, "31", "27"},
    {6, "65", "57"},
    {7, "155", "117"},
    {8, "313", "275"},
    {9, "677", "515"},
}};

}  // namespace

CodeSpec default_code(int k) {
  for (const auto& entry : kDefaultCodes)
    if (entry.k == k) return make_code(k, {entry.g1, entry.g2});
  throw UnsupportedK("no default code for K=" + std::to_string(k) +
                     " (registry covers 3..9)");
}

}  // namespace fec
