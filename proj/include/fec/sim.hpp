#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fec/channel.hpp"
#include "fec/code_spec.hpp"
#include "fec/rate_adaptation.hpp"

namespace fec {

enum class DecoderKind { kViterbiHard, kViterbiSoft, kBcjrLogMap, kBcjrMaxLog };

std::string decoder_name(DecoderKind kind);
std::optional<DecoderKind> decoder_from_name(const std::string& name);

// One code under test: a mother code with optional puncturing and channel
// interleaving, or the uncoded BPSK baseline when `code` is empty.
struct PlanCode {
  std::optional<CodeSpec> code;
  std::optional<PunctureScheme> puncture;
  std::optional<InterleaverSpec> interleaver;

  bool uncoded() const { return !code.has_value(); }
  double effective_rate() const;
  std::string label() const;
};

struct StopRule {
  long long min_bit_errors = 100;
  long long max_bits = 10'000'000;
};

struct SweepPlan {
  std::vector<PlanCode> codes;
  std::vector<DecoderKind> decoders;
  std::vector<ChannelConfig> channel_grid;  // seed fields ignored; derived
  StopRule stop;
  int block_length = 1024;  // information bits per frame, zero-tail terminated
  std::uint64_t master_seed = 0;
};

// One Monte Carlo measurement point. CSV columns follow this field order.
struct BerRecord {
  std::string code_id;
  int constraint_length = 0;  // 1 for the uncoded baseline
  double rate = 1.0;
  std::string decoder;
  std::string channel;
  double ebno_db = 0.0;
  long long bits_tested = 0;
  long long bit_errors = 0;
  double ber = 0.0;
  long long frames_tested = 0;
  long long frame_errors = 0;
  double fer = 0.0;
  double ci_low = 0.0;   // 95% Wilson interval on BER
  double ci_high = 0.0;
  double elapsed_seconds = 0.0;           // wall time of the whole point
  double decoded_bits_per_second = 0.0;   // message bits / decode-only time
  long long states = 1;
  std::uint64_t seed = 0;  // per-point stream root; equal across paired codes
};

struct WilsonInterval {
  double low = 0.0;
  double high = 0.0;
};
WilsonInterval wilson_interval(long long successes, long long trials,
                               double z = 1.959963984540054);

void validate_plan(const SweepPlan& plan);

// Runs one (code, decoder, channel point). Blocks are processed by up to
// `workers` threads; each block draws its own streams derived from
// (master_seed, grid_index, block_index) and results are folded in block
// order until the stop rule is first satisfied, so the outcome is identical
// for any worker count. The noise streams do not depend on the code or
// decoder, which pairs measurements across codes at the same grid point.
BerRecord run_point(const SweepPlan& plan, const PlanCode& entry,
                    DecoderKind decoder, std::size_t grid_index, int workers);

// Full sweep; records sorted by (K, decoder, ebno_db, code id, channel).
// Uncoded baseline entries run once per channel point.
std::vector<BerRecord> run_sweep(const SweepPlan& plan, int workers);

// CSV per the BerRecord layout, header row included, '.' decimal separator.
// With include_timing = false the two timing columns are written as 0, which
// keeps the bytes reproducible across runs and worker counts.
void write_csv(std::ostream& out, const std::vector<BerRecord>& records,
               bool include_timing);

// Plot-ready companion: series, ebno_db, ber, ci_low, ci_high.
void write_plot_csv(std::ostream& out, const std::vector<BerRecord>& records);

// Runs a sweep and writes <path> plus <path stem>_plot.csv. If a point
// fails, partial results are flushed with a trailing "# truncated" marker
// row before the error propagates.
std::vector<BerRecord> run_sweep_to_files(const SweepPlan& plan, int workers,
                                          const std::string& csv_path,
                                          bool include_timing);

// Built-in campaign presets: "paper-sweep" (K in {3,5,7,9}, soft Viterbi,
// Eb/N0 0..6 dB), "burst-demo" (Gilbert-Elliott with and without a 16x16
// interleaver), "k-scaling" (throughput vs K at a fixed operating point).
SweepPlan preset_plan(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace fec
