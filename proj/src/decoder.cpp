#include "grand/decoder.hpp"

#include <stdexcept>

namespace grand {
namespace {

template <class NextPattern, class Accepts>
DecodeOutcome run_loop(BitSpan hard, std::span<const int> pi, const DecodeConfig& cfg,
                       NextPattern next, Accepts accepts) {
  if (cfg.q_max < 1) throw std::invalid_argument("q_max must be at least 1");
  DecodeOutcome out;
  while (out.queries_used < cfg.q_max) {
    const ErrorPattern* e = next();
    if (!e) break;
    if (cfg.h_max && e->hamming_weight() > *cfg.h_max) continue;
    if (e->length() != static_cast<int>(hard.size()))
      throw std::invalid_argument("pattern length does not match the code");
    ++out.queries_used;
    if (accepts(*e)) {
      out.status = DecodeStatus::decoded;
      out.codeword = apply_pattern(hard, pi, *e);
      out.pattern_hw = e->hamming_weight();
      return out;
    }
  }
  return out;
}

void check_inputs(BitSpan hard, std::span<const int> pi, const CodeChecker& checker) {
  if (static_cast<int>(hard.size()) != checker.length() || pi.size() != hard.size())
    throw std::invalid_argument("soft vector length does not match the code");
}

}  // namespace

Bits apply_pattern(BitSpan hard, std::span<const int> pi, const ErrorPattern& e) {
  if (pi.size() != hard.size()) throw std::invalid_argument("permutation length mismatch");
  Bits out(hard.begin(), hard.end());
  for (int j : e.support()) {
    if (j < 0 || static_cast<std::size_t>(j) >= pi.size())
      throw std::out_of_range("pattern index beyond code length");
    out[pi[j]] ^= 1;
  }
  return out;
}

DecodeOutcome decode_with_schedule(BitSpan hard, std::span<const int> pi,
                                   const CodeChecker& checker,
                                   std::span<const ErrorPattern> schedule,
                                   const DecodeConfig& cfg) {
  check_inputs(hard, pi, checker);
  std::size_t pos = 0;
  auto next = [&]() -> const ErrorPattern* {
    return pos < schedule.size() ? &schedule[pos++] : nullptr;
  };
  auto columns = checker.column_syndromes();
  if (columns.empty()) {
    return run_loop(hard, pi, cfg, next, [&](const ErrorPattern& e) {
      return checker.is_codeword(apply_pattern(hard, pi, e));
    });
  }
  const std::uint64_t base = checker.syndrome(hard);
  return run_loop(hard, pi, cfg, next, [&](const ErrorPattern& e) {
    std::uint64_t s = base;
    for (int j : e.support()) s ^= columns[pi[j]];
    return s == 0;
  });
}

DecodeOutcome decode(const SoftVector& s, const CodeChecker& checker, ScheduleGenerator& gen,
                     const DecodeConfig& cfg) {
  Bits hard = hard_decision(s);
  std::vector<int> pi = reliability_permutation(s);
  check_inputs(hard, pi, checker);
  gen.reset();
  auto next = [&gen] { return gen.next(); };
  auto columns = checker.column_syndromes();
  if (columns.empty()) {
    return run_loop(hard, pi, cfg, next, [&](const ErrorPattern& e) {
      return checker.is_codeword(apply_pattern(hard, pi, e));
    });
  }
  const std::uint64_t base = checker.syndrome(hard);
  return run_loop(hard, pi, cfg, next, [&](const ErrorPattern& e) {
    std::uint64_t syn = base;
    for (int j : e.support()) syn ^= columns[pi[j]];
    return syn == 0;
  });
}

DecodeOutcome decode_reference(const SoftVector& s, const CodeChecker& checker,
                               ScheduleGenerator& gen, const DecodeConfig& cfg) {
  Bits hard = hard_decision(s);
  std::vector<int> pi = reliability_permutation(s);
  check_inputs(hard, pi, checker);
  gen.reset();
  return run_loop(hard, pi, cfg, [&gen] { return gen.next(); }, [&](const ErrorPattern& e) {
    return checker.is_codeword(apply_pattern(hard, pi, e));
  });
}

}  // namespace grand
