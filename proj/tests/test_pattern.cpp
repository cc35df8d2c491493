#include <doctest.h>

#include <sstream>

#include "grand/pattern.hpp"
#include "grand/pattern_io.hpp"
#include "oracles.hpp"

using namespace grand;

TEST_CASE("logistic weight") {
  CHECK(logistic_weight(ErrorPattern(5, {1, 2})) == 5);
  CHECK(logistic_weight(ErrorPattern(5)) == 0);
  CHECK(logistic_weight(ErrorPattern(5, {0})) == 1);
}

TEST_CASE("improved logistic weight") {
  CHECK(improved_logistic_weight(ErrorPattern(5, {1, 2})) == 8);
  for (int j = 0; j < 10; ++j)
    CHECK(improved_logistic_weight(ErrorPattern(10, {j})) == static_cast<Weight>(j + 1));
  CHECK(improved_logistic_weight(ErrorPattern(5, {0, 1, 2})) == 14);
}

TEST_CASE("hamming weight") {
  CHECK(hamming_weight(ErrorPattern(10)) == 0);
  CHECK(hamming_weight(ErrorPattern(10, {1, 2})) == 2);
  CHECK(hamming_weight(ErrorPattern(10, {0, 3, 5, 9})) == 4);
}

TEST_CASE("pattern validation") {
  CHECK_THROWS_AS(ErrorPattern(5, {5}), std::invalid_argument);
  CHECK_THROWS_AS(ErrorPattern(5, {2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(ErrorPattern(5, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(ErrorPattern(5, {-1}), std::invalid_argument);
  CHECK(ErrorPattern(5, {0, 4}).contains(4));
  CHECK_FALSE(ErrorPattern(5, {0, 4}).contains(3));
}

TEST_CASE("UPO comparisons from the N=5 Hasse diagram") {
  // 10000 vs 01000: one right swap.
  CHECK(upo_compare(ErrorPattern(5, {0}), ErrorPattern(5, {1})) == UpoOrder::less_or_equal);
  CHECK(upo_compare(ErrorPattern(5, {1}), ErrorPattern(5, {0})) == UpoOrder::greater);
  // 00100 vs 11000: both at LW 3.
  CHECK(upo_compare(ErrorPattern(5, {2}), ErrorPattern(5, {0, 1})) == UpoOrder::incomparable);
  ErrorPattern a(5, {1, 3});
  CHECK(upo_compare(a, a) == UpoOrder::less_or_equal);
  CHECK_THROWS_AS(upo_leq(ErrorPattern(5), ErrorPattern(6)), std::invalid_argument);
}

TEST_CASE("iLW >= LW with equality iff h <= 1, exhaustive N=16") {
  const int n = 16;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    ErrorPattern e(n, oracle::support_of(m, n));
    Weight l = logistic_weight(e), il = improved_logistic_weight(e);
    REQUIRE(il >= l);
    REQUIRE((il == l) == (e.hamming_weight() <= 1));
  }
}

TEST_CASE("dominance criterion equals the BFS closure of both rules, N <= 8") {
  for (int n = 1; n <= 8; ++n) {
    auto reach = oracle::upo_closure(n);
    std::vector<ErrorPattern> all;
    for (std::uint32_t m = 0; m < (1u << n); ++m) all.emplace_back(n, oracle::support_of(m, n));
    for (std::uint32_t a = 0; a < all.size(); ++a)
      for (std::uint32_t b = 0; b < all.size(); ++b) REQUIRE(upo_leq(all[a], all[b]) == reach[a][b]);
  }
}

TEST_CASE("both weights are UPO-monotone, exhaustive N=10") {
  const int n = 10;
  std::vector<ErrorPattern> all;
  for (std::uint32_t m = 0; m < (1u << n); ++m) all.emplace_back(n, oracle::support_of(m, n));
  for (const auto& a : all)
    for (const auto& b : all)
      if (upo_leq(a, b)) {
        REQUIRE(logistic_weight(a) <= logistic_weight(b));
        REQUIRE(improved_logistic_weight(a) <= improved_logistic_weight(b));
      }
}

TEST_CASE("LW levels count partitions into distinct parts") {
  const int n = 16;
  std::vector<std::uint64_t> level(n * (n + 1) / 2 + 1, 0);
  for (std::uint32_t m = 0; m < (1u << n); ++m)
    ++level[logistic_weight(ErrorPattern(n, oracle::support_of(m, n)))];
  for (int l = 0; l <= 40; ++l) CHECK(level[l] == oracle::distinct_partitions(l, n));
}

TEST_CASE("ILWO key order") {
  CHECK(ilwo_key_less(ErrorPattern(8, {4}), ErrorPattern(8, {0, 1})));  // both 5, h first
  CHECK(ilwo_key_less(ErrorPattern(8, {0, 1}), ErrorPattern(8, {5})));
  CHECK_FALSE(ilwo_key_less(ErrorPattern(8, {3}), ErrorPattern(8, {3})));
}

TEST_CASE("pattern text format") {
  std::vector<ErrorPattern> ps{ErrorPattern(8), ErrorPattern(8, {0}), ErrorPattern(8, {1, 7})};
  std::ostringstream out;
  write_patterns(out, ps);
  CHECK(out.str() == "\n0\n1 7\n");
  std::istringstream in(out.str());
  CHECK(read_patterns(in, 8) == ps);

  SUBCASE("random lists survive a write/read cycle") {
    std::mt19937_64 rng(7);
    std::vector<ErrorPattern> random;
    for (int i = 0; i < 500; ++i)
      random.emplace_back(40, oracle::support_of(static_cast<std::uint32_t>(rng()), 32));
    std::ostringstream o;
    write_patterns(o, random);
    std::istringstream i(o.str());
    CHECK(read_patterns(i, 40) == random);
  }
  SUBCASE("parse errors carry the line number") {
    std::istringstream bad("0\n1 2\n3  4\n");
    try {
      read_patterns(bad, 8);
      FAIL("expected a parse error");
    } catch (const PatternParseError& e) {
      CHECK(e.line() == 3);
    }
    std::istringstream unsorted("2 1\n");
    CHECK_THROWS_AS(read_patterns(unsorted, 8), PatternParseError);
    std::istringstream range("9\n");
    CHECK_THROWS_AS(read_patterns(range, 8), PatternParseError);
    std::istringstream junk("x\n");
    CHECK_THROWS_AS(read_patterns(junk, 8), PatternParseError);
  }
}
