#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "grand/pattern.hpp"

namespace grand {

// Index pairs refer to positions in the checked list.
struct ScheduleReport {
  // (first occurrence, repeat)
  std::vector<std::pair<std::size_t, std::size_t>> duplicates;
  // (earlier, later) where later <_UPO earlier strictly
  std::vector<std::pair<std::size_t, std::size_t>> violations;

  bool compliant() const { return duplicates.empty() && violations.empty(); }
  friend bool operator==(const ScheduleReport&, const ScheduleReport&) = default;
};

// All-pairs check, parallel over the later index with OpenMP.
ScheduleReport verify_schedule(std::span<const ErrorPattern> patterns, int workers = 0);

// Single-threaded reference of the same check.
ScheduleReport verify_schedule_serial(std::span<const ErrorPattern> patterns);

}  // namespace grand
