#include "grand/lwo.hpp"

#include <stdexcept>
#include <string>

namespace grand {
namespace {

// Dense 1-based view used to follow the recurrences literally:
// bit[i] set means position i-1 of the 0-based support.
std::vector<char> to_dense(const ErrorPattern& e) {
  std::vector<char> bit(static_cast<std::size_t>(e.length()) + 1, 0);
  for (int j : e.support()) bit[j + 1] = 1;
  return bit;
}

Weight max_weight(int n) { return static_cast<Weight>(n) * (n + 1) / 2; }

}  // namespace

ErrorPattern max_integer_partition(int n, Weight k) {
  if (n < 0) throw std::invalid_argument("negative pattern length");
  if (k > max_weight(n))
    throw InfeasibleWeight("logistic weight " + std::to_string(k) +
                           " not reachable with " + std::to_string(n) + " positions");
  std::vector<int> support;
  for (int i = n; i >= 1 && k > 0; --i) {
    if (static_cast<Weight>(i) <= k) {
      support.push_back(i - 1);
      k -= i;
    }
  }
  return ErrorPattern(n, std::vector<int>(support.rbegin(), support.rend()));
}

bool is_last(const ErrorPattern& e) {
  auto bit = to_dense(e);
  Weight k = logistic_weight(e);
  if (k == 0) return true;
  for (int i = e.length(); i >= 1; --i) {
    // Positions below i can hold at most i(i-1)/2, so i is forced.
    if (static_cast<Weight>(i) * (i - 1) < 2 * k) {
      if (!bit[i]) return false;
      k -= i;
      if (k == 0) return true;
    }
  }
  return false;
}

ErrorPattern next_lwo_pattern(const ErrorPattern& e) {
  const int n = e.length();
  const Weight lw = logistic_weight(e);
  if (is_last(e)) {
    if (lw + 1 > max_weight(n)) throw SequenceExhausted("all-ones pattern reached");
    return max_integer_partition(n, lw + 1);
  }

  auto bit = to_dense(e);
  // Each pass clears at least one set bit at position >= 3.
  for (int pass = 0; pass <= n; ++pass) {
    int lm = 0;
    for (int i = 3; i <= n; ++i) {
      if (bit[i]) {
        lm = i;
        break;
      }
    }
    if (lm == 0) break;
    Weight r = 0;
    for (int i = lm + 1; i <= n; ++i)
      if (bit[i]) r += i;
    if (static_cast<Weight>(lm) * (lm - 1) / 2 + r < lw) {
      for (int i = 1; i <= lm; ++i) bit[i] = 0;
      continue;
    }
    // Redistribute the weight at positions <= lm over positions < lm.
    ErrorPattern prefix = max_integer_partition(lm - 1, lw - r);
    std::vector<int> support = prefix.support();
    for (int i = lm + 1; i <= n; ++i)
      if (bit[i]) support.push_back(i - 1);
    return ErrorPattern(n, std::move(support));
  }
  throw std::logic_error("next_lwo_pattern: no redistributable position found");
}

LwoGenerator::LwoGenerator(int n, std::optional<int> h_max)
    : n_(n), h_max_(h_max), current_(n) {}

LwoGenerator::LwoGenerator(const ErrorPattern& current, std::optional<int> h_max)
    : n_(current.length()), h_max_(h_max), current_(current), emitted_(1), started_(true) {}

const ErrorPattern* LwoGenerator::next() {
  if (exhausted_) return nullptr;
  if (!started_) {
    started_ = true;
    ++emitted_;
    return &current_;
  }
  while (true) {
    try {
      current_ = next_lwo_pattern(current_);
    } catch (const SequenceExhausted&) {
      exhausted_ = true;
      return nullptr;
    }
    if (!h_max_ || current_.hamming_weight() <= *h_max_) break;
  }
  ++emitted_;
  return &current_;
}

void LwoGenerator::reset() {
  current_ = ErrorPattern(n_);
  emitted_ = 0;
  started_ = false;
  exhausted_ = false;
}

std::unique_ptr<ScheduleGenerator> LwoGenerator::clone() const {
  return std::make_unique<LwoGenerator>(*this);
}

std::vector<ErrorPattern> lwo_sequence(int n, std::size_t q, std::optional<int> h_max) {
  LwoGenerator gen(n, h_max);
  return take(gen, q);
}

}  // namespace grand
