#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grand/channel.hpp"
#include "grand/codes.hpp"
#include "grand/decoder.hpp"
#include "grand/schedule.hpp"

namespace grand {

struct SimConfig {
  std::string code = "bch127";  // built-in name or config file
  ScheduleKind schedule = ScheduleKind::lwo;
  std::filesystem::path pattern_file;  // for ScheduleKind::file
  std::vector<double> ebn0_db;
  std::size_t q_max = 1000;
  std::optional<int> h_max;
  std::size_t min_block_errors = 100;
  std::size_t max_blocks = 100000;
  std::uint64_t seed = 1;
  int workers = 1;
  // Paired: the noise of block b depends only on (seed, Eb/N0, b), so every
  // schedule sees the same realizations. Unpaired mixes the schedule
  // settings into the stream.
  bool paired = true;

  void validate() const;
};

enum class StopReason { min_errors, max_blocks };

struct SimResult {
  double ebn0_db = 0.0;
  std::size_t blocks = 0;
  std::size_t block_errors = 0;       // abandoned or decoded to a wrong codeword
  std::size_t undetected_errors = 0;  // decoded to a wrong codeword
  double bler = 0.0;
  double mean_queries = 0.0;
  std::size_t max_queries = 0;
  double wall_seconds = 0.0;
  StopReason stop = StopReason::max_blocks;
};

struct BlockOutcome {
  bool error = false;
  bool undetected = false;
  std::uint32_t queries = 0;
};

// "5.0:0.5:8.0" (inclusive range), "6,6.5,7" or "7".
std::vector<double> parse_ebn0_list(const std::string& text);

// Stream id of the noise at one Eb/N0 point.
std::uint64_t noise_stream(double ebn0_db);

// First q_max patterns of the configured schedule for length n.
std::vector<ErrorPattern> build_schedule(const SimConfig& cfg, int n);

// Encode a random message, transmit it and decode block `block`.
BlockOutcome simulate_block(const LinearCode& code, std::span<const ErrorPattern> schedule,
                            const DecodeConfig& decode, const ChannelConfig& channel,
                            std::uint64_t block);

// One Eb/N0 point: blocks are simulated in chunks in parallel and merged in
// block order, stopping at the block that reaches min_errors or at
// max_blocks. The result does not depend on `workers`.
SimResult run_point(const LinearCode& code, std::span<const ErrorPattern> schedule,
                    const DecodeConfig& decode, const ChannelConfig& channel,
                    std::size_t min_errors, std::size_t max_blocks, int workers);

SimResult run_point_serial(const LinearCode& code, std::span<const ErrorPattern> schedule,
                           const DecodeConfig& decode, const ChannelConfig& channel,
                           std::size_t min_errors, std::size_t max_blocks);

std::vector<SimResult> run_bler(const LinearCode& code, std::span<const ErrorPattern> schedule,
                                const SimConfig& cfg);
std::vector<SimResult> run_bler_serial(const LinearCode& code,
                                       std::span<const ErrorPattern> schedule,
                                       const SimConfig& cfg);
std::vector<SimResult> run_bler(const SimConfig& cfg);

std::string csv_header();
std::string csv_row(const SimConfig& cfg, const std::string& code_name, const SimResult& r);

// Several decoders on identical blocks; variant 0 is the reference whose
// error count drives the stopping rule.
struct DecodeVariant {
  std::string label;
  std::vector<ErrorPattern> schedule;
  DecodeConfig decode;
};

struct PairedResult {
  std::vector<SimResult> results;
  std::vector<std::size_t> only_reference_failed;  // per variant
  std::vector<std::size_t> only_variant_failed;    // per variant
};

PairedResult run_paired(const LinearCode& code, std::span<const DecodeVariant> variants,
                        const ChannelConfig& channel, std::size_t min_reference_errors,
                        std::size_t max_blocks, int workers);

// Most frequent true error patterns in sorted-reliability space, all-zero
// first, then by descending count (ties: ascending iLW, then support).
std::vector<ErrorPattern> estimate_empirical_schedule(const LinearCode& code, double ebn0_db,
                                                      std::size_t num_blocks,
                                                      std::size_t q_out, std::uint64_t seed,
                                                      int workers = 1);

}  // namespace grand
