#include "fec/rate_adaptation.hpp"

#include <numeric>

#include "fec/errors.hpp"

namespace fec {

int PunctureScheme::ones() const {
  return static_cast<int>(
      std::accumulate(keep.begin(), keep.end(), 0,
                      [](int acc, std::uint8_t v) { return acc + (v != 0); }));
}

int PunctureScheme::ones_in_column(int col) const {
  int count = 0;
  for (int row = 0; row < outputs_per_step; ++row) count += kept(row, col);
  return count;
}

PunctureScheme PunctureScheme::parse(const std::string& text) {
  PunctureScheme scheme;
  std::vector<std::string> rows;
  std::string cur;
  for (char c : text) {
    if (c == '/') {
      rows.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  rows.push_back(cur);
  if (rows.size() < 2)
    throw Error("puncture scheme '" + text + "' needs at least 2 rows");
  scheme.outputs_per_step = static_cast<int>(rows.size());
  scheme.period = static_cast<int>(rows.front().size());
  for (const std::string& row : rows) {
    if (static_cast<int>(row.size()) != scheme.period)
      throw Error("puncture scheme '" + text + "' has ragged rows");
    for (char c : row) {
      if (c != '0' && c != '1')
        throw Error("puncture scheme '" + text + "' has non-binary digits");
      scheme.keep.push_back(static_cast<std::uint8_t>(c - '0'));
    }
  }
  scheme.validate();
  return scheme;
}

std::string PunctureScheme::to_string() const {
  std::string out;
  for (int row = 0; row < outputs_per_step; ++row) {
    if (row) out += "/";
    for (int col = 0; col < period; ++col) out += kept(row, col) ? '1' : '0';
  }
  return out;
}

void PunctureScheme::validate() const {
  if (outputs_per_step < 2 || period < 1 ||
      static_cast<int>(keep.size()) != outputs_per_step * period)
    throw Error("malformed puncture scheme");
  for (int col = 0; col < period; ++col)
    if (ones_in_column(col) == 0)
      throw Error("puncture scheme deletes entire step at column " +
                  std::to_string(col));
}

namespace {

template <typename T>
std::vector<T> puncture_impl(std::span<const T> coded,
                             const PunctureScheme& scheme) {
  scheme.validate();
  const int n = scheme.outputs_per_step;
  if (coded.size() % static_cast<std::size_t>(n) != 0)
    throw LengthNotMultipleOfN("coded length " + std::to_string(coded.size()) +
                               " is not a multiple of n=" + std::to_string(n));
  const std::size_t steps = coded.size() / n;
  std::vector<T> out;
  out.reserve(coded.size());
  for (std::size_t step = 0; step < steps; ++step) {
    const int col = static_cast<int>(step % scheme.period);
    for (int row = 0; row < n; ++row)
      if (scheme.kept(row, col)) out.push_back(coded[step * n + row]);
  }
  return out;
}

}  // namespace

std::vector<std::uint8_t> puncture(std::span<const std::uint8_t> coded,
                                   const PunctureScheme& scheme) {
  return puncture_impl(coded, scheme);
}

std::vector<double> puncture(std::span<const double> coded,
                             const PunctureScheme& scheme) {
  return puncture_impl(coded, scheme);
}

SoftWord depuncture(std::span<const double> received,
                    const PunctureScheme& scheme, long long original_steps) {
  scheme.validate();
  const int n = scheme.outputs_per_step;
  long long expected = 0;
  for (long long step = 0; step < original_steps; ++step)
    expected += scheme.ones_in_column(static_cast<int>(step % scheme.period));
  if (static_cast<long long>(received.size()) != expected)
    throw LengthMismatch("punctured length " + std::to_string(received.size()) +
                         " does not match " + std::to_string(expected) +
                         " kept positions over " +
                         std::to_string(original_steps) + " steps");

  SoftWord word;
  word.llrs.assign(static_cast<std::size_t>(original_steps) * n, 0.0);
  std::size_t src = 0;
  for (long long step = 0; step < original_steps; ++step) {
    const int col = static_cast<int>(step % scheme.period);
    for (int row = 0; row < n; ++row)
      if (scheme.kept(row, col))
        word.llrs[static_cast<std::size_t>(step) * n + row] = received[src++];
  }
  return word;
}

InterleaverSpec InterleaverSpec::parse(const std::string& text) {
  const auto x = text.find('x');
  if (x == std::string::npos)
    throw Error("interleaver spec '" + text + "' must look like RxC");
  InterleaverSpec spec;
  try {
    spec.rows = std::stoi(text.substr(0, x));
    spec.cols = std::stoi(text.substr(x + 1));
  } catch (const std::exception&) {
    throw Error("bad interleaver spec '" + text + "'");
  }
  spec.validate();
  return spec;
}

void InterleaverSpec::validate() const {
  if (rows < 2 || cols < 2)
    throw Error("interleaver needs rows >= 2 and cols >= 2, got " +
                std::to_string(rows) + "x" + std::to_string(cols));
}

namespace {

template <typename T>
std::vector<T> permute_blocks(std::span<const T> data,
                              const InterleaverSpec& spec, bool forward) {
  spec.validate();
  const std::size_t block = static_cast<std::size_t>(spec.block_size());
  if (data.size() % block != 0)
    throw LengthNotMultipleOfBlock(
        "length " + std::to_string(data.size()) +
        " is not a multiple of the interleaver block " + std::to_string(block));
  std::vector<T> out(data.size());
  for (std::size_t base = 0; base < data.size(); base += block) {
    for (int r = 0; r < spec.rows; ++r) {
      for (int c = 0; c < spec.cols; ++c) {
        const std::size_t row_major = base + static_cast<std::size_t>(r) * spec.cols + c;
        const std::size_t col_major = base + static_cast<std::size_t>(c) * spec.rows + r;
        if (forward)
          out[col_major] = data[row_major];  // write rows, read columns
        else
          out[row_major] = data[col_major];
      }
    }
  }
  return out;
}

}  // namespace

std::vector<std::uint8_t> interleave(std::span<const std::uint8_t> data,
                                     const InterleaverSpec& spec) {
  return permute_blocks(data, spec, true);
}
std::vector<double> interleave(std::span<const double> data,
                               const InterleaverSpec& spec) {
  return permute_blocks(data, spec, true);
}
std::vector<std::uint8_t> deinterleave(std::span<const std::uint8_t> data,
                                       const InterleaverSpec& spec) {
  return permute_blocks(data, spec, false);
}
std::vector<double> deinterleave(std::span<const double> data,
                                 const InterleaverSpec& spec) {
  return permute_blocks(data, spec, false);
}

}  // namespace fec
