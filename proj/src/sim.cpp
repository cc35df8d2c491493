#include "grand/sim.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cmath>
#include <cstdio>
#include <exception>
#include <map>
#include <omp.h>
#include <sstream>
#include <stdexcept>

#include "grand/code_config.hpp"
#include "grand/pattern_io.hpp"

namespace grand {
namespace {

constexpr std::size_t kFirstChunk = 1024;
constexpr std::size_t kMaxChunk = 1 << 16;

struct BlockSignal {
  Bits sent;
  Bits hard;
  SoftVector soft;
};

BlockSignal transmit_block(const LinearCode& code, const ChannelConfig& channel,
                           std::uint64_t block) {
  BlockRng rng(channel.seed, channel.stream_id, block);
  Bits message(code.dimension());
  for (auto& b : message) b = rng.bit() ? 1 : 0;
  BlockSignal sig;
  sig.sent = code.encode(message);
  sig.soft = transmit(sig.sent, channel, rng);
  hard_decision(sig.soft, sig.hard);
  return sig;
}

BlockOutcome decode_block(const LinearCode& code, const BlockSignal& sig,
                          std::span<const ErrorPattern> schedule, const DecodeConfig& decode,
                          const std::vector<int>& pi) {
  DecodeOutcome d = decode_with_schedule(sig.hard, pi, code, schedule, decode);
  BlockOutcome out;
  out.queries = static_cast<std::uint32_t>(d.queries_used);
  if (!d.decoded()) {
    out.error = true;
  } else if (d.codeword != sig.sent) {
    out.error = true;
    out.undetected = true;
  }
  return out;
}

bool starts_with_zero(std::span<const ErrorPattern> schedule) {
  return !schedule.empty() && schedule.front().is_zero();
}

void check_schedule(const LinearCode& code, std::span<const ErrorPattern> schedule) {
  for (const auto& e : schedule)
    if (e.length() != code.length())
      throw std::invalid_argument("schedule pattern length " + std::to_string(e.length()) +
                                  " does not match code length " +
                                  std::to_string(code.length()));
}

// Runs body(i) for i in [0, count) on `workers` threads, rethrowing the
// first exception.
template <class Body>
void parallel_blocks(std::size_t count, int workers, Body body) {
  std::exception_ptr failure;
  const long n = static_cast<long>(count);
#pragma omp parallel for num_threads(std::max(1, workers)) schedule(dynamic, 16)
  for (long i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

struct Tally {
  SimResult r;
  std::uint64_t total_queries = 0;

  // Returns true once the stopping rule fires.
  bool add(const BlockOutcome& o, std::size_t min_errors, std::size_t max_blocks) {
    ++r.blocks;
    total_queries += o.queries;
    r.max_queries = std::max<std::size_t>(r.max_queries, o.queries);
    if (o.error) ++r.block_errors;
    if (o.undetected) ++r.undetected_errors;
    if (r.block_errors >= min_errors) {
      r.stop = StopReason::min_errors;
      return true;
    }
    if (r.blocks >= max_blocks) {
      r.stop = StopReason::max_blocks;
      return true;
    }
    return false;
  }

  void finish(double ebn0, double seconds) {
    r.ebn0_db = ebn0;
    r.bler = r.blocks ? static_cast<double>(r.block_errors) / r.blocks : 0.0;
    r.mean_queries = r.blocks ? static_cast<double>(total_queries) / r.blocks : 0.0;
    r.wall_seconds = seconds;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::uint64_t schedule_salt(const SimConfig& cfg) {
  std::uint64_t salt = static_cast<std::uint64_t>(cfg.schedule) + 1;
  salt = salt * 0x100000001b3ULL ^ cfg.q_max;
  salt = salt * 0x100000001b3ULL ^ static_cast<std::uint64_t>(cfg.h_max.value_or(-1));
  for (char c : cfg.pattern_file.string()) salt = salt * 0x100000001b3ULL ^ static_cast<unsigned char>(c);
  return salt;
}

ChannelConfig channel_for(const SimConfig& cfg, const LinearCode& code, double ebn0) {
  ChannelConfig ch;
  ch.ebn0_db = ebn0;
  ch.rate = code.rate();
  ch.seed = cfg.seed;
  ch.stream_id = noise_stream(ebn0);
  if (!cfg.paired) ch.stream_id ^= schedule_salt(cfg) << 1;
  return ch;
}

}  // namespace

void SimConfig::validate() const {
  if (ebn0_db.empty()) throw std::invalid_argument("no Eb/N0 points given");
  if (q_max < 1) throw std::invalid_argument("qmax must be >= 1");
  if (h_max && *h_max < 0) throw std::invalid_argument("hmax must be >= 0");
  if (min_block_errors < 1) throw std::invalid_argument("min-errors must be >= 1");
  if (max_blocks < 1) throw std::invalid_argument("max-blocks must be >= 1");
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");
  if (schedule == ScheduleKind::file && pattern_file.empty())
    throw std::invalid_argument("schedule 'file' needs a pattern file");
  for (double e : ebn0_db)
    if (!std::isfinite(e)) throw std::invalid_argument("Eb/N0 must be finite");
}

std::vector<double> parse_ebn0_list(const std::string& text) {
  auto number = [&text](const std::string& s) {
    try {
      std::size_t used = 0;
      double v = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad Eb/N0 list '" + text + "'");
    }
  };
  std::vector<double> out;
  if (std::count(text.begin(), text.end(), ':') == 2) {
    auto a = text.find(':');
    auto b = text.find(':', a + 1);
    double start = number(text.substr(0, a));
    double step = number(text.substr(a + 1, b - a - 1));
    double stop = number(text.substr(b + 1));
    if (step <= 0.0 || stop < start) throw std::invalid_argument("bad Eb/N0 range '" + text + "'");
    const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9));
    for (long i = 0; i <= count; ++i) out.push_back(start + static_cast<double>(i) * step);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(number(item));
  if (out.empty()) throw std::invalid_argument("empty Eb/N0 list");
  return out;
}

std::uint64_t noise_stream(double ebn0_db) {
  return static_cast<std::uint64_t>(std::llround(ebn0_db * 1000.0));
}

std::vector<ErrorPattern> build_schedule(const SimConfig& cfg, int n) {
  if (cfg.schedule == ScheduleKind::file) {
    auto patterns = read_patterns(cfg.pattern_file, n);
    if (patterns.size() > cfg.q_max) patterns.resize(cfg.q_max);
    return patterns;
  }
  return make_sequence(cfg.schedule, n, cfg.q_max, cfg.h_max);
}

BlockOutcome simulate_block(const LinearCode& code, std::span<const ErrorPattern> schedule,
                            const DecodeConfig& decode, const ChannelConfig& channel,
                            std::uint64_t block) {
  BlockSignal sig = transmit_block(code, channel, block);
  // y-hat is checked first; when it is already a codeword the decoder
  // stops at query 1 and the reliability sort can be skipped.
  if (starts_with_zero(schedule) && code.is_codeword(sig.hard)) {
    BlockOutcome out;
    out.queries = 1;
    out.error = out.undetected = sig.hard != sig.sent;
    return out;
  }
  std::vector<int> pi = reliability_permutation(sig.soft);
  return decode_block(code, sig, schedule, decode, pi);
}

SimResult run_point(const LinearCode& code, std::span<const ErrorPattern> schedule,
                    const DecodeConfig& decode, const ChannelConfig& channel,
                    std::size_t min_errors, std::size_t max_blocks, int workers) {
  check_schedule(code, schedule);
  const auto t0 = std::chrono::steady_clock::now();
  Tally tally;
  std::vector<BlockOutcome> outcomes;
  std::size_t next_block = 0;
  std::size_t chunk = kFirstChunk;
  bool done = false;
  while (!done) {
    const std::size_t count = std::min(chunk, max_blocks - next_block);
    outcomes.assign(count, {});
    parallel_blocks(count, workers, [&](std::size_t i) {
      outcomes[i] = simulate_block(code, schedule, decode, channel, next_block + i);
    });
    for (std::size_t i = 0; i < count && !done; ++i)
      done = tally.add(outcomes[i], min_errors, max_blocks);
    next_block += count;
    chunk = std::min(chunk * 2, kMaxChunk);
  }
  tally.finish(channel.ebn0_db, seconds_since(t0));
  return tally.r;
}

SimResult run_point_serial(const LinearCode& code, std::span<const ErrorPattern> schedule,
                           const DecodeConfig& decode, const ChannelConfig& channel,
                           std::size_t min_errors, std::size_t max_blocks) {
  check_schedule(code, schedule);
  const auto t0 = std::chrono::steady_clock::now();
  Tally tally;
  for (std::uint64_t b = 0;; ++b)
    if (tally.add(simulate_block(code, schedule, decode, channel, b), min_errors, max_blocks))
      break;
  tally.finish(channel.ebn0_db, seconds_since(t0));
  return tally.r;
}

std::vector<SimResult> run_bler(const LinearCode& code, std::span<const ErrorPattern> schedule,
                                const SimConfig& cfg) {
  cfg.validate();
  DecodeConfig decode{cfg.q_max, cfg.h_max};
  std::vector<SimResult> out;
  for (double ebn0 : cfg.ebn0_db)
    out.push_back(run_point(code, schedule, decode, channel_for(cfg, code, ebn0),
                            cfg.min_block_errors, cfg.max_blocks, cfg.workers));
  return out;
}

std::vector<SimResult> run_bler_serial(const LinearCode& code,
                                       std::span<const ErrorPattern> schedule,
                                       const SimConfig& cfg) {
  cfg.validate();
  DecodeConfig decode{cfg.q_max, cfg.h_max};
  std::vector<SimResult> out;
  for (double ebn0 : cfg.ebn0_db)
    out.push_back(run_point_serial(code, schedule, decode, channel_for(cfg, code, ebn0),
                                   cfg.min_block_errors, cfg.max_blocks));
  return out;
}

std::vector<SimResult> run_bler(const SimConfig& cfg) {
  cfg.validate();
  auto code = load_code(cfg.code);
  auto schedule = build_schedule(cfg, code->length());
  return run_bler(*code, schedule, cfg);
}

std::string csv_header() {
  return "code,schedule,ebn0_db,qmax,hmax,blocks,block_errors,undetected,bler,mean_queries,"
         "max_queries,seed";
}

std::string csv_row(const SimConfig& cfg, const std::string& code_name, const SimResult& r) {
  char buf[512];
  std::string hmax = cfg.h_max ? std::to_string(*cfg.h_max) : "none";
  std::snprintf(buf, sizeof buf, "%s,%s,%.3f,%zu,%s,%zu,%zu,%zu,%.6e,%.4f,%zu,%llu",
                code_name.c_str(), std::string(to_string(cfg.schedule)).c_str(), r.ebn0_db,
                cfg.q_max, hmax.c_str(), r.blocks, r.block_errors, r.undetected_errors, r.bler,
                r.mean_queries, r.max_queries, static_cast<unsigned long long>(cfg.seed));
  return buf;
}

PairedResult run_paired(const LinearCode& code, std::span<const DecodeVariant> variants,
                        const ChannelConfig& channel, std::size_t min_reference_errors,
                        std::size_t max_blocks, int workers) {
  if (variants.empty()) throw std::invalid_argument("no decoder variants");
  for (const auto& v : variants) check_schedule(code, v.schedule);
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t nv = variants.size();

  std::vector<Tally> tallies(nv);
  PairedResult out;
  out.only_reference_failed.assign(nv, 0);
  out.only_variant_failed.assign(nv, 0);

  std::vector<BlockOutcome> outcomes;  // block-major
  std::size_t next_block = 0;
  std::size_t chunk = kFirstChunk;
  bool done = false;
  while (!done) {
    const std::size_t count = std::min(chunk, max_blocks - next_block);
    outcomes.assign(count * nv, {});
    parallel_blocks(count, workers, [&](std::size_t i) {
      BlockSignal sig = transmit_block(code, channel, next_block + i);
      const bool hard_ok = code.is_codeword(sig.hard);
      const bool wrong = sig.hard != sig.sent;
      std::vector<int> pi;
      for (std::size_t v = 0; v < nv; ++v) {
        if (hard_ok && starts_with_zero(variants[v].schedule)) {
          outcomes[i * nv + v] = BlockOutcome{wrong, wrong, 1};
          continue;
        }
        if (pi.empty()) pi = reliability_permutation(sig.soft);
        outcomes[i * nv + v] = decode_block(code, sig, variants[v].schedule, variants[v].decode, pi);
      }
    });
    for (std::size_t i = 0; i < count && !done; ++i) {
      const BlockOutcome& ref = outcomes[i * nv];
      for (std::size_t v = 0; v < nv; ++v) {
        const BlockOutcome& o = outcomes[i * nv + v];
        if (ref.error && !o.error) ++out.only_reference_failed[v];
        if (!ref.error && o.error) ++out.only_variant_failed[v];
        // Only the reference drives the stopping rule.
        bool stop = tallies[v].add(o, v == 0 ? min_reference_errors : SIZE_MAX, max_blocks);
        if (v == 0) done = stop;
      }
    }
    next_block += count;
    chunk = std::min(chunk * 2, kMaxChunk);
  }
  const double seconds = seconds_since(t0);
  for (std::size_t v = 0; v < nv; ++v) {
    tallies[v].r.stop = tallies[0].r.stop;
    tallies[v].finish(channel.ebn0_db, seconds);
    out.results.push_back(tallies[v].r);
  }
  return out;
}

std::vector<ErrorPattern> estimate_empirical_schedule(const LinearCode& code, double ebn0_db,
                                                      std::size_t num_blocks,
                                                      std::size_t q_out, std::uint64_t seed,
                                                      int workers) {
  if (num_blocks < 1) throw std::invalid_argument("num_blocks must be >= 1");
  ChannelConfig channel;
  channel.ebn0_db = ebn0_db;
  channel.rate = code.rate();
  channel.seed = seed;
  channel.stream_id = noise_stream(ebn0_db);
  const int n = code.length();

  std::map<std::vector<int>, std::size_t> counts;
  std::exception_ptr failure;
  const long blocks = static_cast<long>(num_blocks);
#pragma omp parallel num_threads(std::max(1, workers))
  {
    std::map<std::vector<int>, std::size_t> local;
    std::vector<int> pi, rank(n);
#pragma omp for schedule(dynamic, 64) nowait
    for (long b = 0; b < blocks; ++b) {
      try {
        BlockSignal sig = transmit_block(code, channel, static_cast<std::uint64_t>(b));
        reliability_permutation(sig.soft, pi);
        for (int r = 0; r < n; ++r) rank[pi[r]] = r;
        std::vector<int> support;
        for (int i = 0; i < n; ++i)
          if (sig.hard[i] != sig.sent[i]) support.push_back(rank[i]);
        std::sort(support.begin(), support.end());
        ++local[support];
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
#pragma omp critical
    for (auto& [support, c] : local) counts[support] += c;
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<std::pair<ErrorPattern, std::size_t>> ranked;
  for (auto& [support, c] : counts)
    if (!support.empty()) ranked.emplace_back(ErrorPattern(n, support), c);
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return ilwo_key_less(a.first, b.first);
  });

  std::vector<ErrorPattern> out;
  if (q_out == 0) return out;
  out.emplace_back(n);
  for (auto& [e, c] : ranked) {
    if (out.size() >= q_out) break;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace grand
