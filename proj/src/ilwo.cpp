#include "grand/ilwo.hpp"

#include <algorithm>

namespace grand {

bool IlwoGenerator::After::operator()(const Entry& a, const Entry& b) const {
  if (a.ilw != b.ilw) return a.ilw > b.ilw;
  const auto& sa = a.pattern.support();
  const auto& sb = b.pattern.support();
  if (sa.size() != sb.size()) return sa.size() > sb.size();
  return sa > sb;
}

IlwoGenerator::IlwoGenerator(int n, std::optional<int> h_max) : n_(n), h_max_(h_max) {
  reset();
}

void IlwoGenerator::reset() {
  frontier_ = {};
  frontier_.push(Entry{0, ErrorPattern(n_)});
}

void IlwoGenerator::push(std::vector<int> support) {
  Weight w = improved_logistic_weight(support);
  frontier_.push(Entry{w, ErrorPattern(n_, std::move(support))});
}

const ErrorPattern* IlwoGenerator::next() {
  if (frontier_.empty()) return nullptr;
  current_ = frontier_.top().pattern;
  frontier_.pop();

  const auto& s = current_.support();
  const int h = current_.hamming_weight();
  // Child by addition: set bit 0.
  if ((s.empty() || s.front() != 0) && n_ > 0 && (!h_max_ || h + 1 <= *h_max_)) {
    std::vector<int> child;
    child.reserve(s.size() + 1);
    child.push_back(0);
    child.insert(child.end(), s.begin(), s.end());
    push(std::move(child));
  }
  // Child by right swap of the lowest set bit.
  if (!s.empty()) {
    int moved = s.front() + 1;
    bool free = (s.size() == 1) ? true : s[1] != moved;
    if (moved < n_ && free) {
      std::vector<int> child = s;
      child.front() = moved;
      push(std::move(child));
    }
  }
  return &current_;
}

std::unique_ptr<ScheduleGenerator> IlwoGenerator::clone() const {
  return std::make_unique<IlwoGenerator>(*this);
}

std::vector<ErrorPattern> ilwo_sequence(int n, std::size_t q, std::optional<int> h_max) {
  IlwoGenerator gen(n, h_max);
  return take(gen, q);
}

std::vector<std::vector<int>> create_remaining_h3(int l, int m, int n) {
  std::vector<std::vector<int>> out;
  int a = l, b = m, c = n;
  while (c - 1 > b + 1) {
    ++a;
    ++b;
    --c;
    out.push_back({a, b, c});
  }
  return out;
}

std::vector<ErrorPattern> approx_next_weight(ApproxIlwoState& s) {
  const long dw = static_cast<long>(s.dw);
  std::vector<std::vector<int>> batch;
  auto emit_h3 = [&batch](int l, int m, int n) {
    batch.push_back({l, m, n});
    auto rest = create_remaining_h3(l, m, n);
    batch.insert(batch.end(), rest.begin(), rest.end());
  };

  batch.push_back({static_cast<int>(dw - 1)});
  if (dw > 4) {
    int w = static_cast<int>((dw - 1) / 2) - 1;
    int k = static_cast<int>((dw - 1) % 2);
    bool guard = s.literal_h2_guard ? (w >= 1 && k > w) : (w >= 1 && w > k);
    if (guard) {
      batch.push_back({k, w});
      while (w - 1 > k + 2) {
        w -= 1;
        k += 2;
        batch.push_back({k, w});
      }
    }

    const long h3dw = static_cast<long>(s.h3dw);
    if (dw == 14) {
      s.l = 0;
      s.m = 1;
      s.n = 2;
      batch.push_back({0, 1, 2});
      s.h3dw = s.dw;
    } else if (dw > 14) {
      const int m_old = s.m;
      const int n_old = s.n;
      if (h3dw == dw - 1) {
        if (s.m > 1) {
          s.l = 0;
          s.m -= 1;
          s.n += 1;
          s.h3dw = s.dw;
          emit_h3(0, s.m, s.n);
        }
        // Second seed at this weight: the other l=0 solution one step up
        // from (m_old, n_old), i.e. (m_old+3, n_old-2) moved by (-1, +1).
        if (m_old + 2 < n_old - 1) {
          const int m1 = m_old + 2;
          const int n1 = n_old - 1;
          s.l = 0;
          if (static_cast<long>(s.h3dw) == dw - 1) {
            s.m = m1;
            s.n = n1;
          }
          s.h3dw = s.dw;
          emit_h3(0, m1, n1);
        }
      } else if (h3dw == dw - 2 && s.n > s.m + 1) {
        s.l = 0;
        s.m += 1;
        s.h3dw = s.dw;
        emit_h3(0, s.m, s.n);
      } else if (h3dw == dw - 3) {
        s.l = 0;
        s.m = 1;
        s.n += 1;
        s.h3dw = s.dw;
        emit_h3(0, s.m, s.n);
      }
    }
  }
  s.dw += 1;

  std::vector<ErrorPattern> out;
  out.reserve(batch.size());
  for (auto& support : batch) {
    if (support.back() < s.n_bits) out.emplace_back(s.n_bits, std::move(support));
  }
  return out;
}

ApproxIlwoGenerator::ApproxIlwoGenerator(int n, std::optional<int> h_max)
    : n_(n), h_max_(h_max), zero_(n) {
  reset();
}

void ApproxIlwoGenerator::reset() {
  state_ = ApproxIlwoState{};
  state_.n_bits = n_;
  batch_.clear();
  pos_ = 0;
  started_ = false;
}

const ErrorPattern* ApproxIlwoGenerator::next() {
  if (!started_) {
    started_ = true;
    return &zero_;
  }
  // Beyond 6n no pattern with h <= 3 fits in n positions.
  const Weight last_weight = 6 * static_cast<Weight>(n_);
  while (true) {
    while (pos_ < batch_.size()) {
      const ErrorPattern& e = batch_[pos_++];
      if (!h_max_ || e.hamming_weight() <= *h_max_) return &e;
    }
    if (state_.dw > last_weight) return nullptr;
    batch_ = approx_next_weight(state_);
    pos_ = 0;
  }
}

std::unique_ptr<ScheduleGenerator> ApproxIlwoGenerator::clone() const {
  return std::make_unique<ApproxIlwoGenerator>(*this);
}

std::vector<ErrorPattern> approx_sequence(int n, std::size_t q, std::optional<int> h_max) {
  ApproxIlwoGenerator gen(n, h_max);
  return take(gen, q);
}

}  // namespace grand
