#include "grand/verify.hpp"

#include <algorithm>
#include <map>
#include <omp.h>

namespace grand {
namespace {

std::vector<std::pair<std::size_t, std::size_t>> find_duplicates(
    std::span<const ErrorPattern> patterns) {
  std::vector<std::pair<std::size_t, std::size_t>> dups;
  std::map<std::vector<int>, std::size_t> first_seen;
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    auto [it, inserted] = first_seen.emplace(patterns[i].support(), i);
    if (!inserted) dups.emplace_back(it->second, i);
  }
  return dups;
}

// Earlier indices i < j whose pattern strictly dominates pattern j.
void violations_for(std::span<const ErrorPattern> patterns, std::size_t j,
                    std::vector<std::pair<std::size_t, std::size_t>>& out) {
  std::span<const int> later(patterns[j].support());
  for (std::size_t i = 0; i < j; ++i) {
    std::span<const int> earlier(patterns[i].support());
    if (later.size() > earlier.size()) continue;
    if (upo_leq(later, earlier) && !std::equal(later.begin(), later.end(), earlier.begin(),
                                               earlier.end()))
      out.emplace_back(i, j);
  }
}

}  // namespace

ScheduleReport verify_schedule_serial(std::span<const ErrorPattern> patterns) {
  ScheduleReport report;
  report.duplicates = find_duplicates(patterns);
  for (std::size_t j = 0; j < patterns.size(); ++j) violations_for(patterns, j, report.violations);
  return report;
}

ScheduleReport verify_schedule(std::span<const ErrorPattern> patterns, int workers) {
  ScheduleReport report;
  report.duplicates = find_duplicates(patterns);
  const long count = static_cast<long>(patterns.size());
  const int threads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel num_threads(threads)
  {
    std::vector<std::pair<std::size_t, std::size_t>> local;
#pragma omp for schedule(dynamic, 64) nowait
    for (long j = 0; j < count; ++j) violations_for(patterns, static_cast<std::size_t>(j), local);
#pragma omp critical
    report.violations.insert(report.violations.end(), local.begin(), local.end());
  }
  std::sort(report.violations.begin(), report.violations.end(),
            [](const auto& a, const auto& b) {
              return a.second != b.second ? a.second < b.second : a.first < b.first;
            });
  return report;
}

}  // namespace grand
