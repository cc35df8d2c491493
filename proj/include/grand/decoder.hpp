#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "grand/channel.hpp"
#include "grand/codes.hpp"
#include "grand/pattern.hpp"
#include "grand/schedule.hpp"

namespace grand {

struct DecodeConfig {
  std::size_t q_max = 1000;   // abandonment budget, counting the check of y-hat itself
  std::optional<int> h_max;   // heavier patterns are skipped and not counted
};

enum class DecodeStatus { decoded, abandoned };

struct DecodeOutcome {
  DecodeStatus status = DecodeStatus::abandoned;
  Bits codeword;               // set when decoded
  std::size_t queries_used = 0;
  int pattern_hw = 0;          // Hamming weight of the accepted pattern
  bool decoded() const { return status == DecodeStatus::decoded; }
};

// hard with the bits at original positions pi[j], j in supp(e), flipped.
Bits apply_pattern(BitSpan hard, std::span<const int> pi, const ErrorPattern& e);

// ORBGRAND: test y-hat + pi^{-1}(e) for e taken from the (reset) generator
// until the checker accepts or q_max membership tests have been made.
// Uses the checker's syndrome route when it has one.
DecodeOutcome decode(const SoftVector& s, const CodeChecker& checker, ScheduleGenerator& gen,
                     const DecodeConfig& cfg);

// Same loop with a full is_codeword call per query.
DecodeOutcome decode_reference(const SoftVector& s, const CodeChecker& checker,
                               ScheduleGenerator& gen, const DecodeConfig& cfg);

// Fast path on precomputed inputs, used by the simulator: replays
// `schedule` (whose first entry should be the all-zero pattern).
DecodeOutcome decode_with_schedule(BitSpan hard, std::span<const int> pi,
                                   const CodeChecker& checker,
                                   std::span<const ErrorPattern> schedule,
                                   const DecodeConfig& cfg);

}  // namespace grand
