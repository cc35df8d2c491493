#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "grand/pattern.hpp"
#include "grand/schedule.hpp"

namespace grand {

class InfeasibleWeight : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Pattern of logistic weight k built greedily from the largest position
// down; this is the minimum Hamming weight pattern of its level.
// Throws InfeasibleWeight when k > n(n+1)/2.
ErrorPattern max_integer_partition(int n, Weight k);

// True iff e is the final (maximum Hamming weight) pattern of its logistic
// weight level in logistic weight order.
bool is_last(const ErrorPattern& e);

// Successor of e in logistic weight order, computed from e alone.
// Throws SequenceExhausted when e is the all-ones pattern.
ErrorPattern next_lwo_pattern(const ErrorPattern& e);

// Memoryless logistic weight order generator. Emits the all-zero pattern
// first, then iterates next_lwo_pattern. Patterns heavier than h_max are
// skipped.
class LwoGenerator final : public ScheduleGenerator {
 public:
  explicit LwoGenerator(int n, std::optional<int> h_max = std::nullopt);
  // Resume after `current`, which is treated as already emitted.
  LwoGenerator(const ErrorPattern& current, std::optional<int> h_max = std::nullopt);

  const ErrorPattern* next() override;
  void reset() override;
  std::unique_ptr<ScheduleGenerator> clone() const override;

  const ErrorPattern& current() const { return current_; }
  std::size_t emitted_count() const { return emitted_; }

 private:
  int n_;
  std::optional<int> h_max_;
  ErrorPattern current_;
  std::size_t emitted_ = 0;
  bool started_ = false;
  bool exhausted_ = false;
};

std::vector<ErrorPattern> lwo_sequence(int n, std::size_t q,
                                       std::optional<int> h_max = std::nullopt);

}  // namespace grand
