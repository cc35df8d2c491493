#include "grand/stats.hpp"

#include <boost/math/distributions/binomial.hpp>

namespace grand {

using boost::math::binomial_distribution;

Interval clopper_pearson(std::size_t k, std::size_t n, double confidence) {
  if (n == 0) return {0.0, 1.0};
  const double alpha = (1.0 - confidence) / 2.0;
  const auto trials = static_cast<double>(n);
  const auto successes = static_cast<double>(k);
  return {binomial_distribution<>::find_lower_bound_on_p(trials, successes, alpha),
          binomial_distribution<>::find_upper_bound_on_p(trials, successes, alpha)};
}

double binomial_upper_tail(std::size_t k, std::size_t n, double p) {
  if (k == 0) return 1.0;
  if (k > n) return 0.0;
  binomial_distribution<> dist(static_cast<double>(n), p);
  return cdf(complement(dist, static_cast<double>(k - 1)));
}

double binomial_lower_tail(std::size_t k, std::size_t n, double p) {
  if (k >= n) return 1.0;
  binomial_distribution<> dist(static_cast<double>(n), p);
  return cdf(dist, static_cast<double>(k));
}

double mcnemar_one_sided(std::size_t wins, std::size_t losses) {
  return binomial_upper_tail(wins, wins + losses, 0.5);
}

}  // namespace grand
