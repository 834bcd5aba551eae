#include "fec/sim.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>

#include "fec/analysis.hpp"
#include "fec/bcjr.hpp"
#include "fec/bits.hpp"
#include "fec/encoder.hpp"
#include "fec/errors.hpp"
#include "fec/viterbi.hpp"

namespace fec {

std::string decoder_name(DecoderKind kind) {
  switch (kind) {
    case DecoderKind::kViterbiHard: return "viterbi-hard";
    case DecoderKind::kViterbiSoft: return "viterbi-soft";
    case DecoderKind::kBcjrLogMap: return "bcjr-logmap";
    case DecoderKind::kBcjrMaxLog: return "bcjr-maxlog";
  }
  return "?";
}

std::optional<DecoderKind> decoder_from_name(const std::string& name) {
  if (name == "viterbi-hard") return DecoderKind::kViterbiHard;
  if (name == "viterbi-soft") return DecoderKind::kViterbiSoft;
  if (name == "bcjr-logmap") return DecoderKind::kBcjrLogMap;
  if (name == "bcjr-maxlog") return DecoderKind::kBcjrMaxLog;
  return std::nullopt;
}

double PlanCode::effective_rate() const {
  if (uncoded()) return 1.0;
  // P information bits per period against popcount(matrix) transmitted bits.
  return puncture ? puncture->rate() : code->rate();
}

std::string PlanCode::label() const {
  if (uncoded()) return "uncoded";
  std::string out = code->id;
  if (puncture) out += "+p" + puncture->to_string();
  if (interleaver)
    out += "+il" + std::to_string(interleaver->rows) + "x" +
           std::to_string(interleaver->cols);
  return out;
}

WilsonInterval wilson_interval(long long successes, long long trials,
                               double z) {
  WilsonInterval ci;
  if (trials <= 0) return ci;
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half =
      z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  ci.low = std::max(0.0, center - half);
  ci.high = std::min(1.0, center + half);
  return ci;
}

void validate_plan(const SweepPlan& plan) {
  if (plan.codes.empty()) throw Error("sweep plan has no codes");
  if (plan.channel_grid.empty()) throw Error("sweep plan has no channel points");
  if (plan.block_length < 1) throw Error("block length must be positive");
  if (plan.stop.max_bits <= plan.block_length)
    throw Error("stop rule unsatisfiable: max_bits must exceed block length");
  if (plan.stop.min_bit_errors < 1)
    throw Error("stop rule needs min_bit_errors >= 1");
  bool needs_decoder = false;
  for (const auto& entry : plan.codes) {
    if (!entry.uncoded()) needs_decoder = true;
    if (entry.puncture && entry.code &&
        entry.puncture->outputs_per_step != entry.code->outputs_per_step)
      throw Error("puncture scheme rows do not match code outputs for " +
                  entry.label());
    if (entry.interleaver && entry.code) {
      entry.interleaver->validate();
      const long long coded_bits =
          static_cast<long long>(entry.code->outputs_per_step) *
          (plan.block_length + entry.code->memory());
      long long sent_bits = coded_bits;
      if (entry.puncture) {
        sent_bits = 0;
        const long long steps = plan.block_length + entry.code->memory();
        for (long long s = 0; s < steps; ++s)
          sent_bits += entry.puncture->ones_in_column(
              static_cast<int>(s % entry.puncture->period));
      }
      if (sent_bits % entry.interleaver->block_size() != 0)
        throw Error("coded frame of " + std::to_string(sent_bits) +
                    " bits is not a multiple of interleaver block " +
                    std::to_string(entry.interleaver->block_size()) + " for " +
                    entry.label());
    }
  }
  if (needs_decoder && plan.decoders.empty())
    throw Error("sweep plan has coded entries but no decoders");
}

namespace {

struct BlockOutcome {
  long long bit_errors = 0;
  bool frame_error = false;
  double decode_seconds = 0.0;
};

struct PointContext {
  const SweepPlan* plan;
  const PlanCode* entry;
  DecoderKind decoder;
  std::size_t grid_index;
  const Trellis* trellis;  // null for uncoded
  double effective_rate;
  std::uint64_t point_seed;
};

std::vector<std::uint8_t> random_message(Rng& rng, int length) {
  std::vector<std::uint8_t> bits(length);
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng.next_bit());
  return bits;
}

// The per-block simulation pipeline: message -> encode -> [puncture] ->
// [interleave] -> channel -> [deinterleave] -> [depuncture] -> decode.
BlockOutcome run_block(const PointContext& ctx, long long block_index) {
  const SweepPlan& plan = *ctx.plan;
  const PlanCode& entry = *ctx.entry;
  const std::uint64_t block_seed = Rng::mix(ctx.point_seed,
                                            static_cast<std::uint64_t>(block_index));
  Rng message_rng(Rng::mix(block_seed, 0));
  ChannelConfig channel = plan.channel_grid[ctx.grid_index];
  channel.rate = ctx.effective_rate;
  channel.seed = Rng::mix(block_seed, 1);

  const std::vector<std::uint8_t> message =
      random_message(message_rng, plan.block_length);
  BlockOutcome outcome;

  if (entry.uncoded()) {
    std::vector<std::uint8_t> received;
    switch (channel.model) {
      case ChannelModel::kAwgn: {
        const SoftWord word = transmit_awgn(message, channel);
        received.resize(word.size());
        for (std::size_t i = 0; i < word.size(); ++i)
          received[i] = word.llrs[i] < 0.0 ? 1 : 0;
        break;
      }
      case ChannelModel::kBsc:
        received = transmit_bsc(message, channel.bsc_p, channel.seed);
        break;
      case ChannelModel::kGilbertElliott:
        received = transmit_gilbert_elliott(message, channel).bits;
        break;
    }
    outcome.bit_errors =
        static_cast<long long>(hamming_distance(message, received));
    outcome.frame_error = outcome.bit_errors > 0;
    return outcome;
  }

  const CodeSpec& code = *entry.code;
  std::vector<std::uint8_t> coded = encode_block(code, message, true);
  std::vector<std::uint8_t> sent =
      entry.puncture ? puncture(std::span<const std::uint8_t>(coded),
                                *entry.puncture)
                     : std::move(coded);
  if (entry.interleaver)
    sent = interleave(std::span<const std::uint8_t>(sent), *entry.interleaver);

  // Channel; soft decoders and punctured streams need LLRs, the plain hard
  // path keeps bits.
  const bool soft_path =
      ctx.decoder != DecoderKind::kViterbiHard || entry.puncture.has_value();
  SoftWord llrs;
  std::vector<std::uint8_t> hard;
  switch (channel.model) {
    case ChannelModel::kAwgn: {
      llrs = transmit_awgn(sent, channel);
      if (!soft_path) {
        hard.resize(llrs.size());
        for (std::size_t i = 0; i < llrs.size(); ++i)
          hard[i] = llrs.llrs[i] < 0.0 ? 1 : 0;
      }
      break;
    }
    case ChannelModel::kBsc: {
      hard = transmit_bsc(sent, channel.bsc_p, channel.seed);
      if (soft_path)
        llrs = hard_bits_to_llrs(hard, bsc_llr_magnitude(channel.bsc_p));
      break;
    }
    case ChannelModel::kGilbertElliott: {
      hard = transmit_gilbert_elliott(sent, channel).bits;
      if (soft_path) {
        const double avg_error =
            channel.ge.stationary_bad() * channel.ge.error_prob_bad +
            (1.0 - channel.ge.stationary_bad()) * channel.ge.error_prob_good;
        llrs = hard_bits_to_llrs(hard, bsc_llr_magnitude(avg_error));
      }
      break;
    }
  }

  if (entry.interleaver) {
    if (soft_path)
      llrs.llrs = deinterleave(std::span<const double>(llrs.llrs),
                               *entry.interleaver);
    else
      hard = deinterleave(std::span<const std::uint8_t>(hard),
                          *entry.interleaver);
  }
  if (entry.puncture) {
    const long long steps = plan.block_length + code.memory();
    llrs = depuncture(llrs.llrs, *entry.puncture, steps);
  }

  std::vector<std::uint8_t> decoded;
  const auto t0 = std::chrono::steady_clock::now();
  switch (ctx.decoder) {
    case DecoderKind::kViterbiHard:
      if (soft_path)
        decoded = viterbi_decode_soft(*ctx.trellis, llrs, true).decoded;
      else
        decoded = viterbi_decode_hard(*ctx.trellis, hard, true).decoded;
      break;
    case DecoderKind::kViterbiSoft:
      decoded = viterbi_decode_soft(*ctx.trellis, llrs, true).decoded;
      break;
    case DecoderKind::kBcjrLogMap:
    case DecoderKind::kBcjrMaxLog: {
      const auto variant = ctx.decoder == DecoderKind::kBcjrLogMap
                               ? BcjrVariant::kLogMap
                               : BcjrVariant::kMaxLogMap;
      const PosteriorLlrs posterior =
          bcjr_decode(*ctx.trellis, llrs, true, variant);
      decoded.resize(posterior.llrs.size());
      for (std::size_t i = 0; i < decoded.size(); ++i)
        decoded[i] = posterior.llrs[i] < 0.0 ? 1 : 0;
      break;
    }
  }
  const auto t1 = std::chrono::steady_clock::now();
  outcome.decode_seconds = std::chrono::duration<double>(t1 - t0).count();
  outcome.bit_errors =
      static_cast<long long>(hamming_distance(message, decoded));
  outcome.frame_error = outcome.bit_errors > 0;
  return outcome;
}

struct Totals {
  long long bits = 0;
  long long bit_errors = 0;
  long long frames = 0;
  long long frame_errors = 0;
  double decode_seconds = 0.0;
};

bool stop_satisfied(const Totals& totals, const StopRule& rule) {
  return totals.bit_errors >= rule.min_bit_errors ||
         totals.bits >= rule.max_bits;
}

}  // namespace

BerRecord run_point(const SweepPlan& plan, const PlanCode& entry,
                    DecoderKind decoder, std::size_t grid_index, int workers) {
  validate_plan(plan);
  const auto wall0 = std::chrono::steady_clock::now();

  Trellis trellis;
  PointContext ctx{&plan, &entry, decoder, grid_index, nullptr,
                   entry.effective_rate(),
                   Rng::mix(plan.master_seed, grid_index)};
  if (!entry.uncoded()) {
    trellis = build_trellis(*entry.code);
    ctx.trellis = &trellis;
  }

  // Workers claim block indices speculatively; outcomes are folded strictly
  // in block order and folding stops at the first prefix satisfying the
  // stop rule. Blocks completed beyond that prefix are discarded, so the
  // totals do not depend on scheduling or on the worker count.
  Totals totals;
  std::atomic<long long> next_block{0};
  std::atomic<bool> done{false};
  std::mutex fold_mutex;
  std::map<long long, BlockOutcome> pending;
  long long frontier = 0;

  auto worker_loop = [&]() {
    while (!done.load(std::memory_order_relaxed)) {
      const long long block = next_block.fetch_add(1);
      BlockOutcome outcome = run_block(ctx, block);
      std::lock_guard<std::mutex> lock(fold_mutex);
      if (done.load(std::memory_order_relaxed)) return;
      pending.emplace(block, outcome);
      while (!pending.empty() && pending.begin()->first == frontier) {
        const BlockOutcome& front = pending.begin()->second;
        totals.bits += plan.block_length;
        totals.bit_errors += front.bit_errors;
        totals.frames += 1;
        totals.frame_errors += front.frame_error ? 1 : 0;
        totals.decode_seconds += front.decode_seconds;
        pending.erase(pending.begin());
        ++frontier;
        if (stop_satisfied(totals, plan.stop)) {
          done.store(true, std::memory_order_relaxed);
          return;
        }
      }
    }
  };

  const int thread_count = std::max(1, workers);
  if (thread_count == 1) {
    worker_loop();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(thread_count);
    for (int i = 0; i < thread_count; ++i) threads.emplace_back(worker_loop);
    for (auto& t : threads) t.join();
  }

  const auto wall1 = std::chrono::steady_clock::now();

  BerRecord record;
  record.code_id = entry.label();
  record.constraint_length = entry.uncoded() ? 1 : entry.code->constraint_length;
  record.rate = ctx.effective_rate;
  record.decoder = entry.uncoded() ? "uncoded" : decoder_name(decoder);
  const ChannelConfig& channel = plan.channel_grid[grid_index];
  record.channel = channel_model_name(channel.model);
  record.ebno_db = channel.ebno_db;
  record.bits_tested = totals.bits;
  record.bit_errors = totals.bit_errors;
  record.ber = totals.bits ? static_cast<double>(totals.bit_errors) / totals.bits : 0.0;
  record.frames_tested = totals.frames;
  record.frame_errors = totals.frame_errors;
  record.fer = totals.frames ? static_cast<double>(totals.frame_errors) / totals.frames
                             : 0.0;
  const WilsonInterval ci = wilson_interval(totals.bit_errors, totals.bits);
  record.ci_low = ci.low;
  record.ci_high = ci.high;
  record.elapsed_seconds = std::chrono::duration<double>(wall1 - wall0).count();
  record.decoded_bits_per_second =
      totals.decode_seconds > 0.0 ? totals.bits / totals.decode_seconds : 0.0;
  record.states =
      entry.uncoded() ? 1 : complexity_profile(*entry.code).states;
  record.seed = ctx.point_seed;
  return record;
}

namespace {

void sort_records(std::vector<BerRecord>& records) {
  std::sort(records.begin(), records.end(),
            [](const BerRecord& a, const BerRecord& b) {
              if (a.constraint_length != b.constraint_length)
                return a.constraint_length < b.constraint_length;
              if (a.decoder != b.decoder) return a.decoder < b.decoder;
              if (a.ebno_db != b.ebno_db) return a.ebno_db < b.ebno_db;
              if (a.code_id != b.code_id) return a.code_id < b.code_id;
              return a.channel < b.channel;
            });
}

template <typename Consume>
void for_each_point(const SweepPlan& plan, Consume&& consume) {
  for (const PlanCode& entry : plan.codes) {
    const std::vector<DecoderKind> decoders =
        entry.uncoded() ? std::vector<DecoderKind>{DecoderKind::kViterbiHard}
                        : plan.decoders;
    for (DecoderKind decoder : decoders) {
      for (std::size_t g = 0; g < plan.channel_grid.size(); ++g)
        consume(entry, decoder, g);
    }
  }
}

}  // namespace

std::vector<BerRecord> run_sweep(const SweepPlan& plan, int workers) {
  validate_plan(plan);
  std::vector<BerRecord> records;
  for_each_point(plan, [&](const PlanCode& entry, DecoderKind decoder,
                           std::size_t g) {
    records.push_back(run_point(plan, entry, decoder, g, workers));
  });
  sort_records(records);
  return records;
}

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

void write_record(std::ostream& out, const BerRecord& r, bool include_timing) {
  out << r.code_id << ',' << r.constraint_length << ',' << format_double(r.rate)
      << ',' << r.decoder << ',' << r.channel << ',' << format_double(r.ebno_db)
      << ',' << r.bits_tested << ',' << r.bit_errors << ','
      << format_double(r.ber) << ',' << r.frames_tested << ',' << r.frame_errors
      << ',' << format_double(r.fer) << ',' << format_double(r.ci_low) << ','
      << format_double(r.ci_high) << ','
      << format_double(include_timing ? r.elapsed_seconds : 0.0) << ','
      << format_double(include_timing ? r.decoded_bits_per_second : 0.0) << ','
      << r.states << ',' << r.seed << '\n';
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<BerRecord>& records,
               bool include_timing) {
  out << "code_id,K,rate,decoder,channel,ebno_db,bits_tested,bit_errors,ber,"
         "frames_tested,frame_errors,fer,ci_low,ci_high,elapsed_seconds,"
         "decoded_bits_per_second,states,seed\n";
  for (const BerRecord& r : records) write_record(out, r, include_timing);
}

void write_plot_csv(std::ostream& out, const std::vector<BerRecord>& records) {
  out << "series,ebno_db,ber,ci_low,ci_high\n";
  for (const BerRecord& r : records) {
    out << r.code_id << '/' << r.decoder << '/' << r.channel << ','
        << format_double(r.ebno_db) << ',' << format_double(r.ber) << ','
        << format_double(r.ci_low) << ',' << format_double(r.ci_high) << '\n';
  }
}

std::vector<BerRecord> run_sweep_to_files(const SweepPlan& plan, int workers,
                                          const std::string& csv_path,
                                          bool include_timing) {
  validate_plan(plan);
  std::vector<BerRecord> records;
  std::string plot_path = csv_path;
  const auto dot = plot_path.rfind('.');
  if (dot != std::string::npos && plot_path.find('/', dot) == std::string::npos)
    plot_path = plot_path.substr(0, dot);
  plot_path += "_plot.csv";

  auto flush = [&](bool truncated, const std::string& reason) {
    std::ofstream csv(csv_path, std::ios::binary);
    if (!csv) throw Error("cannot open output file " + csv_path);
    write_csv(csv, records, include_timing);
    if (truncated) csv << "# truncated: " << reason << '\n';
    std::ofstream plot(plot_path, std::ios::binary);
    write_plot_csv(plot, records);
    if (truncated) plot << "# truncated: " << reason << '\n';
  };

  try {
    for_each_point(plan, [&](const PlanCode& entry, DecoderKind decoder,
                             std::size_t g) {
      records.push_back(run_point(plan, entry, decoder, g, workers));
    });
  } catch (const std::exception& e) {
    sort_records(records);
    flush(true, e.what());
    throw;
  }
  sort_records(records);
  flush(false, "");
  return records;
}

SweepPlan preset_plan(const std::string& name) {
  SweepPlan plan;
  if (name == "paper-sweep") {
    for (int k : {3, 5, 7, 9}) plan.codes.push_back({default_code(k), {}, {}});
    plan.decoders = {DecoderKind::kViterbiSoft};
    for (int db = 0; db <= 6; ++db) {
      ChannelConfig c;
      c.model = ChannelModel::kAwgn;
      c.ebno_db = db;
      plan.channel_grid.push_back(c);
    }
    plan.stop = {100, 10'000'000};
    plan.block_length = 1024;
    return plan;
  }
  if (name == "burst-demo") {
    PlanCode plain{default_code(7), {}, {}};
    PlanCode interleaved{default_code(7), {}, InterleaverSpec{16, 16}};
    plan.codes = {plain, interleaved};
    plan.decoders = {DecoderKind::kViterbiHard};
    ChannelConfig c;
    c.model = ChannelModel::kGilbertElliott;
    plan.channel_grid = {c};
    plan.stop = {1'000'000'000'000LL, 1'000'000};  // run the full bit budget
    // 2*(1018 + 6) = 2048 coded bits per frame, a multiple of the 16x16 block.
    plan.block_length = 1018;
    return plan;
  }
  if (name == "k-scaling") {
    for (int k = 3; k <= 9; ++k) plan.codes.push_back({default_code(k), {}, {}});
    plan.decoders = {DecoderKind::kViterbiSoft};
    ChannelConfig c;
    c.model = ChannelModel::kAwgn;
    c.ebno_db = 4.0;
    plan.channel_grid = {c};
    plan.stop = {1'000'000'000'000LL, 1'000'000};
    plan.block_length = 1024;
    return plan;
  }
  throw Error("unknown preset '" + name + "'; expected one of paper-sweep, "
              "burst-demo, k-scaling");
}

std::vector<std::string> preset_names() {
  return {"paper-sweep", "burst-demo", "k-scaling"};
}

}  // namespace fec
