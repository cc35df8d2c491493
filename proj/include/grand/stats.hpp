#pragma once

#include <cstddef>

namespace grand {

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
  bool overlaps(const Interval& other) const { return lo <= other.hi && other.lo <= hi; }
};

// Two-sided Clopper-Pearson interval for k successes in n trials.
Interval clopper_pearson(std::size_t k, std::size_t n, double confidence = 0.95);

// P(X >= k) and P(X <= k) for X ~ Binomial(n, p).
double binomial_upper_tail(std::size_t k, std::size_t n, double p);
double binomial_lower_tail(std::size_t k, std::size_t n, double p);

// Exact one-sided McNemar test on discordant pairs: probability of seeing at
// least `wins` out of `wins + losses` under a fair coin.
double mcnemar_one_sided(std::size_t wins, std::size_t losses);

}  // namespace grand
