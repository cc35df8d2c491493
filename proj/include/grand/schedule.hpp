#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "grand/pattern.hpp"

namespace grand {

class SequenceExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Stateful source of error patterns in schedule order. The first pattern of
// every schedule is the all-zero pattern.
class ScheduleGenerator {
 public:
  virtual ~ScheduleGenerator() = default;

  // Returns the next pattern, or nullptr once the pattern space is
  // exhausted. The pointer stays valid until the following call.
  virtual const ErrorPattern* next() = 0;
  virtual void reset() = 0;
  virtual std::unique_ptr<ScheduleGenerator> clone() const = 0;
};

// Replays a fixed list, e.g. a dumped or empirically estimated schedule.
class PatternListGenerator final : public ScheduleGenerator {
 public:
  explicit PatternListGenerator(std::shared_ptr<const std::vector<ErrorPattern>> patterns);
  explicit PatternListGenerator(std::vector<ErrorPattern> patterns);

  const ErrorPattern* next() override;
  void reset() override { pos_ = 0; }
  std::unique_ptr<ScheduleGenerator> clone() const override;

 private:
  std::shared_ptr<const std::vector<ErrorPattern>> patterns_;
  std::size_t pos_ = 0;
};

enum class ScheduleKind { lwo, ilwo, ilwo_approx, file };

std::string_view to_string(ScheduleKind kind);
ScheduleKind parse_schedule_kind(std::string_view name);

// Generator for an algorithmic schedule; `file` is rejected here.
std::unique_ptr<ScheduleGenerator> make_generator(ScheduleKind kind, int n,
                                                  std::optional<int> h_max = std::nullopt);

// Pulls up to q patterns from the generator.
std::vector<ErrorPattern> take(ScheduleGenerator& gen, std::size_t q);

std::vector<ErrorPattern> make_sequence(ScheduleKind kind, int n, std::size_t q,
                                        std::optional<int> h_max = std::nullopt);

}  // namespace grand
