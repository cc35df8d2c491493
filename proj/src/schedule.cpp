#include "grand/schedule.hpp"

#include <algorithm>

#include "grand/ilwo.hpp"
#include "grand/lwo.hpp"

namespace grand {

PatternListGenerator::PatternListGenerator(
    std::shared_ptr<const std::vector<ErrorPattern>> patterns)
    : patterns_(std::move(patterns)) {}

PatternListGenerator::PatternListGenerator(std::vector<ErrorPattern> patterns)
    : patterns_(std::make_shared<const std::vector<ErrorPattern>>(std::move(patterns))) {}

const ErrorPattern* PatternListGenerator::next() {
  if (pos_ >= patterns_->size()) return nullptr;
  return &(*patterns_)[pos_++];
}

std::unique_ptr<ScheduleGenerator> PatternListGenerator::clone() const {
  return std::make_unique<PatternListGenerator>(*this);
}

std::string_view to_string(ScheduleKind kind) {
  switch (kind) {
    case ScheduleKind::lwo: return "lwo";
    case ScheduleKind::ilwo: return "ilwo";
    case ScheduleKind::ilwo_approx: return "ilwo-approx";
    case ScheduleKind::file: return "file";
  }
  return "?";
}

ScheduleKind parse_schedule_kind(std::string_view name) {
  if (name == "lwo") return ScheduleKind::lwo;
  if (name == "ilwo") return ScheduleKind::ilwo;
  if (name == "ilwo-approx") return ScheduleKind::ilwo_approx;
  if (name == "file") return ScheduleKind::file;
  throw std::invalid_argument("unknown schedule '" + std::string(name) + "'");
}

std::unique_ptr<ScheduleGenerator> make_generator(ScheduleKind kind, int n,
                                                  std::optional<int> h_max) {
  switch (kind) {
    case ScheduleKind::lwo: return std::make_unique<LwoGenerator>(n, h_max);
    case ScheduleKind::ilwo: return std::make_unique<IlwoGenerator>(n, h_max);
    case ScheduleKind::ilwo_approx: return std::make_unique<ApproxIlwoGenerator>(n, h_max);
    case ScheduleKind::file: break;
  }
  throw std::invalid_argument("file schedules are loaded with read_patterns");
}

std::vector<ErrorPattern> take(ScheduleGenerator& gen, std::size_t q) {
  std::vector<ErrorPattern> out;
  out.reserve(std::min<std::size_t>(q, 1 << 16));
  while (out.size() < q) {
    const ErrorPattern* e = gen.next();
    if (!e) break;
    out.push_back(*e);
  }
  return out;
}

std::vector<ErrorPattern> make_sequence(ScheduleKind kind, int n, std::size_t q,
                                        std::optional<int> h_max) {
  auto gen = make_generator(kind, n, h_max);
  return take(*gen, q);
}

}  // namespace grand
