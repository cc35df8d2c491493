#include "grand/pattern.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace grand {

ErrorPattern::ErrorPattern(int length) : length_(length) {
  if (length < 0) throw std::invalid_argument("negative pattern length");
}

ErrorPattern::ErrorPattern(int length, std::vector<int> support)
    : length_(length), support_(std::move(support)) {
  if (length < 0) throw std::invalid_argument("negative pattern length");
  for (std::size_t i = 0; i < support_.size(); ++i) {
    int j = support_[i];
    if (j < 0 || j >= length_)
      throw std::invalid_argument("support index " + std::to_string(j) +
                                  " outside [0, " + std::to_string(length_) + ")");
    if (i > 0 && support_[i - 1] >= j)
      throw std::invalid_argument("support must be strictly ascending");
  }
}

bool ErrorPattern::contains(int index) const {
  return std::binary_search(support_.begin(), support_.end(), index);
}

Weight logistic_weight(std::span<const int> support) {
  Weight w = 0;
  for (int j : support) w += static_cast<Weight>(j) + 1;
  return w;
}

Weight logistic_weight(const ErrorPattern& e) { return logistic_weight(e.support()); }

Weight improved_logistic_weight(std::span<const int> support) {
  Weight w = 0;
  for (std::size_t i = 0; i < support.size(); ++i)
    w += (i + 1) * (static_cast<Weight>(support[i]) + 1);
  return w;
}

Weight improved_logistic_weight(const ErrorPattern& e) {
  return improved_logistic_weight(e.support());
}

int hamming_weight(const ErrorPattern& e) { return e.hamming_weight(); }

bool upo_leq(std::span<const int> a, std::span<const int> b) {
  if (a.size() > b.size()) return false;
  // Match the k-th largest entries; spare low entries of b come from additions.
  auto ia = a.rbegin();
  auto ib = b.rbegin();
  for (; ia != a.rend(); ++ia, ++ib)
    if (*ia > *ib) return false;
  return true;
}

bool upo_leq(const ErrorPattern& a, const ErrorPattern& b) {
  if (a.length() != b.length()) throw std::invalid_argument("pattern length mismatch");
  return upo_leq(std::span<const int>(a.support()), std::span<const int>(b.support()));
}

UpoOrder upo_compare(const ErrorPattern& a, const ErrorPattern& b) {
  if (upo_leq(a, b)) return UpoOrder::less_or_equal;
  if (upo_leq(b, a)) return UpoOrder::greater;
  return UpoOrder::incomparable;
}

bool ilwo_key_less(const ErrorPattern& a, const ErrorPattern& b) {
  Weight wa = improved_logistic_weight(a);
  Weight wb = improved_logistic_weight(b);
  if (wa != wb) return wa < wb;
  if (a.hamming_weight() != b.hamming_weight()) return a.hamming_weight() < b.hamming_weight();
  return a.support() < b.support();
}

}  // namespace grand
