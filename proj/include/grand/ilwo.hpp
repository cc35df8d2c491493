#pragma once

#include <cstddef>
#include <optional>
#include <queue>
#include <vector>

#include "grand/pattern.hpp"
#include "grand/schedule.hpp"

namespace grand {

// Exact improved logistic weight order: ascending iLW, ties broken by
// Hamming weight and then lexicographic support.
//
// Best-first search over a spanning tree of the UPO Hasse diagram. The tree
// parent of a pattern clears bit 0 when it is set, otherwise moves the lowest
// set bit one position down. Both inverse moves strictly increase iLW, so
// the frontier minimum is always the next pattern and no dedup is needed.
class IlwoGenerator final : public ScheduleGenerator {
 public:
  explicit IlwoGenerator(int n, std::optional<int> h_max = std::nullopt);

  const ErrorPattern* next() override;
  void reset() override;
  std::unique_ptr<ScheduleGenerator> clone() const override;

  std::size_t frontier_size() const { return frontier_.size(); }

 private:
  struct Entry {
    Weight ilw;
    ErrorPattern pattern;
  };
  struct After {
    bool operator()(const Entry& a, const Entry& b) const;
  };

  void push(std::vector<int> support);

  int n_;
  std::optional<int> h_max_;
  std::priority_queue<Entry, std::vector<Entry>, After> frontier_;
  ErrorPattern current_;
};

std::vector<ErrorPattern> ilwo_sequence(int n, std::size_t q,
                                        std::optional<int> h_max = std::nullopt);

// State of the approximate iLWO machine (Hamming weight <= 3).
struct ApproxIlwoState {
  int n_bits = 0;
  Weight dw = 1;    // weight of the next batch
  Weight h3dw = 0;  // last weight at which h=3 patterns were created
  int l = 0;        // indices of the first h=3 pattern created at h3dw
  int m = 0;
  int n = 0;
  // Read the h=2 guard literally as "k > w" instead of "w > k".
  bool literal_h2_guard = false;
};

// Patterns with iLW == state.dw, in generation order; advances state.dw.
// Indices >= n_bits are dropped from the output, not from the state.
std::vector<ErrorPattern> approx_next_weight(ApproxIlwoState& state);

// Sweep (a+1, b+1, c-1) from (l, m, n) while c-1 > b+1, excluding the seed.
std::vector<std::vector<int>> create_remaining_h3(int l, int m, int n);

class ApproxIlwoGenerator final : public ScheduleGenerator {
 public:
  explicit ApproxIlwoGenerator(int n, std::optional<int> h_max = std::nullopt);

  const ErrorPattern* next() override;
  void reset() override;
  std::unique_ptr<ScheduleGenerator> clone() const override;

 private:
  int n_;
  std::optional<int> h_max_;
  ApproxIlwoState state_;
  std::vector<ErrorPattern> batch_;
  std::size_t pos_ = 0;
  bool started_ = false;
  ErrorPattern zero_;
};

std::vector<ErrorPattern> approx_sequence(int n, std::size_t q,
                                          std::optional<int> h_max = std::nullopt);

}  // namespace grand
