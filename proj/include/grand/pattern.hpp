#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace grand {

using Weight = std::uint64_t;

// Error pattern over n bit positions, stored as its ascending support.
// Positions live in sorted-reliability space: index 0 is the least
// reliable received bit.
class ErrorPattern {
 public:
  ErrorPattern() = default;
  explicit ErrorPattern(int length);
  ErrorPattern(int length, std::vector<int> support);
  ErrorPattern(int length, std::initializer_list<int> support)
      : ErrorPattern(length, std::vector<int>(support)) {}

  int length() const { return length_; }
  const std::vector<int>& support() const { return support_; }
  int hamming_weight() const { return static_cast<int>(support_.size()); }
  bool is_zero() const { return support_.empty(); }
  bool contains(int index) const;

  friend bool operator==(const ErrorPattern&, const ErrorPattern&) = default;

 private:
  int length_ = 0;
  std::vector<int> support_;
};

// Sum of 1-based positions of the flipped bits.
Weight logistic_weight(const ErrorPattern& e);
Weight logistic_weight(std::span<const int> support);

// Sum over the ordered support j_0 < ... < j_{h-1} of (i+1)*(j_i+1).
Weight improved_logistic_weight(const ErrorPattern& e);
Weight improved_logistic_weight(std::span<const int> support);

int hamming_weight(const ErrorPattern& e);

enum class UpoOrder { less_or_equal, greater, incomparable };

// Comparison in the universal partial order generated by the addition rule
// (set one more bit) and the right-swap rule (move a set bit from t to t+1,
// towards a more reliable position).
//
// a <= b iff for every p, |supp(a) ∩ [p, n)| <= |supp(b) ∩ [p, n)|, which is
// the same as: h(a) <= h(b) and the k-th largest index of a never exceeds the
// k-th largest index of b.
UpoOrder upo_compare(const ErrorPattern& a, const ErrorPattern& b);
bool upo_leq(const ErrorPattern& a, const ErrorPattern& b);
bool upo_leq(std::span<const int> a, std::span<const int> b);

// Total order used by the exact iLWO schedule: iLW, then Hamming weight,
// then lexicographic support.
bool ilwo_key_less(const ErrorPattern& a, const ErrorPattern& b);

}  // namespace grand
