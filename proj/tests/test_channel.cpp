#include <doctest.h>

#include <cmath>
#include <numeric>

#include "grand/channel.hpp"
#include "grand/stats.hpp"
#include "oracles.hpp"

using namespace grand;

TEST_CASE("noise variance") {
  ChannelConfig cfg;
  cfg.rate = 0.5;
  cfg.ebn0_db = 0.0;
  CHECK(cfg.noise_variance() == doctest::Approx(1.0));
  cfg.ebn0_db = 10.0;
  CHECK(cfg.noise_variance() == doctest::Approx(0.1));
  cfg.rate = 113.0 / 127.0;
  cfg.ebn0_db = 7.0;
  CHECK(cfg.noise_variance() == doctest::Approx(1.0 / (2.0 * cfg.rate * std::pow(10.0, 0.7))));
  cfg.rate = 0.0;
  CHECK_THROWS_AS(cfg.noise_variance(), std::invalid_argument);
}

TEST_CASE("hard-decision BER matches Q(sqrt(2 R Eb/N0))") {
  ChannelConfig cfg;
  cfg.rate = 113.0 / 127.0;
  cfg.ebn0_db = 6.0;
  cfg.seed = 5;
  const double p = oracle::gaussian_tail(std::sqrt(2.0 * cfg.rate * std::pow(10.0, 0.6)));
  Bits zeros(127, 0), ones(127, 1);
  std::size_t errors = 0, bits = 0;
  for (std::uint64_t b = 0; b < 8000; ++b) {
    BlockRng rng(cfg.seed, 0, b);
    const Bits& sent = (b % 2) ? ones : zeros;
    Bits hard = hard_decision(transmit(sent, cfg, rng));
    for (int i = 0; i < 127; ++i) errors += hard[i] != sent[i];
    bits += 127;
  }
  REQUIRE(bits >= 1000000);
  MESSAGE("BER " << double(errors) / bits << " vs " << p);
  CHECK(binomial_upper_tail(errors, bits, p) >= 0.005);
  CHECK(binomial_lower_tail(errors, bits, p) >= 0.005);
}

TEST_CASE("LLR mean and variance") {
  ChannelConfig cfg;
  cfg.rate = 0.5;
  cfg.ebn0_db = 3.0;
  const double var = cfg.noise_variance();
  Bits zeros(128, 0);
  double sum = 0, sq = 0;
  std::size_t n = 0;
  for (std::uint64_t b = 0; b < 2000; ++b) {
    BlockRng rng(1, 7, b);
    for (double l : transmit(zeros, cfg, rng).llrs) {
      sum += l;
      sq += l * l;
      ++n;
    }
  }
  const double mean = sum / n, v = sq / n - mean * mean;
  // LLR ~ N(2/var, 4/var)
  CHECK(mean == doctest::Approx(2.0 / var).epsilon(0.01));
  CHECK(v == doctest::Approx(4.0 / var).epsilon(0.02));
}

TEST_CASE("block streams are deterministic and distinct") {
  ChannelConfig cfg;
  cfg.rate = 0.5;
  cfg.ebn0_db = 2.0;
  Bits zeros(64, 0);
  BlockRng a(3, 1, 10), b(3, 1, 10), c(3, 1, 11), d(3, 2, 10), e(4, 1, 10);
  auto sa = transmit(zeros, cfg, a).llrs;
  CHECK(sa == transmit(zeros, cfg, b).llrs);
  CHECK(sa != transmit(zeros, cfg, c).llrs);
  CHECK(sa != transmit(zeros, cfg, d).llrs);
  CHECK(sa != transmit(zeros, cfg, e).llrs);

  BlockRng r(9, 9, 9);
  std::size_t ones = 0;
  for (int i = 0; i < 100000; ++i) ones += r.bit();
  CHECK(binomial_upper_tail(ones, 100000, 0.5) >= 0.005);
  CHECK(binomial_lower_tail(ones, 100000, 0.5) >= 0.005);
}

TEST_CASE("hard decision and tie rules") {
  SoftVector s{{1.5, -0.2, 0.0, -0.0, 3.0, -1.5}};
  CHECK(hard_decision(s) == Bits{0, 1, 0, 0, 0, 1});
  // |llr|: 1.5 0.2 0 0 3 1.5
  CHECK(reliability_permutation(s) == std::vector<int>{2, 3, 1, 0, 5, 4});
  SoftVector flat{std::vector<double>(10, -1.0)};
  std::vector<int> id(10);
  std::iota(id.begin(), id.end(), 0);
  CHECK(reliability_permutation(flat) == id);
}

TEST_CASE("reliability permutation is a sorting permutation") {
  std::mt19937_64 rng(77);
  std::normal_distribution<double> g(0.0, 2.0);
  std::vector<int> out;
  for (int t = 0; t < 200; ++t) {
    SoftVector s;
    for (int i = 0; i < 127; ++i) s.llrs.push_back(t % 3 ? g(rng) : std::round(g(rng)));
    reliability_permutation(s, out);
    REQUIRE(out == reliability_permutation(s));
    std::vector<int> sorted = out;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> id(127);
    std::iota(id.begin(), id.end(), 0);
    REQUIRE(sorted == id);
    for (int i = 1; i < 127; ++i) {
      double a = std::abs(s.llrs[out[i - 1]]), b = std::abs(s.llrs[out[i]]);
      REQUIRE(a <= b);
      if (a == b) REQUIRE(out[i - 1] < out[i]);
    }
  }
}
