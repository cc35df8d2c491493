#include <doctest.h>

#include <map>
#include <set>

#include "grand/ilwo.hpp"
#include "grand/verify.hpp"
#include "oracles.hpp"

using namespace grand;
using Supports = std::vector<std::vector<int>>;

namespace {

Supports supports(const std::vector<ErrorPattern>& ps) {
  Supports out;
  for (const auto& p : ps) out.push_back(p.support());
  return out;
}

Supports batch_for(Weight dw, ApproxIlwoState s = {}) {
  if (s.n_bits == 0) s.n_bits = 128;
  s.dw = dw;
  return supports(approx_next_weight(s));
}

// Exact h <= 3 patterns of each iLW up to max_w, indices < n.
std::map<Weight, std::set<std::vector<int>>> exact_h3_levels(int n, Weight max_w) {
  std::map<Weight, std::set<std::vector<int>>> levels;
  for (int a = 0; a < n; ++a) {
    if (oracle::ilw({a}) <= max_w) levels[oracle::ilw({a})].insert({a});
    for (int b = a + 1; b < n; ++b) {
      if (oracle::ilw({a, b}) <= max_w) levels[oracle::ilw({a, b})].insert({a, b});
      for (int c = b + 1; c < n; ++c) {
        Weight w = oracle::ilw({a, b, c});
        if (w > max_w) break;
        levels[w].insert({a, b, c});
      }
    }
  }
  return levels;
}

}  // namespace

TEST_CASE("exact iLWO opening") {
  auto seq = ilwo_sequence(8, 13);
  CHECK(supports(seq) == Supports{{}, {0}, {1}, {2}, {3}, {4}, {0, 1}, {5}, {6}, {0, 2}, {7}, {1, 2}, {0, 3}});
  auto brute = oracle::ilwo_brute_force(8);
  CHECK(supports(seq) == Supports(brute.begin(), brute.begin() + 13));
  CHECK(ilwo_sequence(5, 2)[1] == ErrorPattern(5, {0}));

  auto longer = ilwo_sequence(16, 400);
  auto first_h3 = std::find_if(longer.begin(), longer.end(),
                               [](const ErrorPattern& e) { return e.hamming_weight() == 3; });
  REQUIRE(first_h3 != longer.end());
  CHECK(first_h3->support() == std::vector<int>{0, 1, 2});
  CHECK(improved_logistic_weight(*first_h3) == 14);
}

TEST_CASE("ilwo_sequence") {
  auto seq = ilwo_sequence(128, 1000);
  CHECK(seq.size() == 1000);
  for (std::size_t i = 1; i < seq.size(); ++i)
    REQUIRE(improved_logistic_weight(seq[i - 1]) <= improved_logistic_weight(seq[i]));
  CHECK(supports(ilwo_sequence(5, 3)) == Supports{{}, {0}, {1}});
  auto all = ilwo_sequence(5, 32);
  CHECK(all.size() == 32);
  auto all_supports = supports(all);
  CHECK(std::set<std::vector<int>>(all_supports.begin(), all_supports.end()).size() == 32);
  CHECK(ilwo_sequence(5, 100).size() == 32);
}

TEST_CASE("exact iLWO equals brute-force sorting, N <= 12") {
  for (int n = 1; n <= 12; ++n) {
    auto seq = ilwo_sequence(n, SIZE_MAX);
    REQUIRE(supports(seq) == oracle::ilwo_brute_force(n));
  }
}

TEST_CASE("h_max prunes the exact search") {
  auto capped = ilwo_sequence(12, SIZE_MAX, 2);
  Supports expected;
  for (auto& s : oracle::ilwo_brute_force(12))
    if (s.size() <= 2) expected.push_back(s);
  CHECK(supports(capped) == expected);
}

TEST_CASE("create_remaining_h3") {
  CHECK(create_remaining_h3(0, 1, 4) == Supports{{1, 2, 3}});
  CHECK(create_remaining_h3(0, 1, 2).empty());
  CHECK(create_remaining_h3(0, 1, 6) == Supports{{1, 2, 5}, {2, 3, 4}});
  for (auto& p : create_remaining_h3(0, 2, 11)) CHECK(oracle::ilw(p) == oracle::ilw({0, 2, 11}));
}

TEST_CASE("approx_next_weight batches") {
  CHECK(batch_for(5) == Supports{{4}, {0, 1}});
  CHECK(batch_for(6) == Supports{{5}});
  CHECK(batch_for(11) == Supports{{10}, {0, 4}, {2, 3}});
  CHECK(batch_for(14) == Supports{{13}, {1, 5}, {3, 4}, {0, 1, 2}});

  ApproxIlwoState s;
  s.h3dw = 19;
  s.m = 2;
  s.n = 3;
  auto b20 = batch_for(20, s);
  Supports h3;
  for (auto& p : b20)
    if (p.size() == 3) h3.push_back(p);
  CHECK(h3 == Supports{{0, 1, 4}, {1, 2, 3}});

  // Driving the machine from dw=1 reaches the same state at 20.
  ApproxIlwoState run;
  run.n_bits = 128;
  for (int dw = 1; dw < 20; ++dw) approx_next_weight(run);
  CHECK(run.h3dw == 19);
  CHECK(run.m == 2);
  CHECK(run.n == 3);
}

TEST_CASE("approx_sequence") {
  CHECK(supports(approx_sequence(128, 8)) == Supports{{}, {0}, {1}, {2}, {3}, {4}, {0, 1}, {5}});
  CHECK(supports(approx_sequence(4, 6)) == Supports{{}, {0}, {1}, {2}, {3}, {0, 1}});
  CHECK(approx_sequence(128, 1000) == approx_sequence(128, 1000));
  for (const auto& e : approx_sequence(128, 3000)) REQUIRE(e.hamming_weight() <= 3);
  // Small N: the generator runs out instead of looping.
  auto tiny = approx_sequence(4, 1000);
  CHECK(tiny.size() <= 1 + 4 + 6 + 4);
}

TEST_CASE("approximate batches: exact weights, no duplicates, subset of exact levels") {
  const Weight max_dw = 1000;
  auto exact = exact_h3_levels(128, max_dw);
  ApproxIlwoState s;
  s.n_bits = 128;
  std::set<std::vector<int>> seen;
  std::size_t emitted = 0, exact_total = 0, emitted_h3 = 0, exact_h3 = 0;
  for (Weight dw = 1; dw <= max_dw; ++dw) {
    for (const auto& e : approx_next_weight(s)) {
      REQUIRE(improved_logistic_weight(e) == dw);
      REQUIRE(e.hamming_weight() <= 3);
      REQUIRE(seen.insert(e.support()).second);
      REQUIRE(exact[dw].count(e.support()) == 1);
      ++emitted;
      if (e.hamming_weight() == 3) ++emitted_h3;
    }
  }
  for (auto& [w, set] : exact) {
    exact_total += set.size();
    for (auto& p : set) exact_h3 += p.size() == 3;
  }
  MESSAGE("approximate iLWO coverage up to dw=1000: " << emitted << "/" << exact_total << " = "
          << static_cast<double>(emitted) / exact_total << " (h=3: " << emitted_h3 << "/"
          << exact_h3 << ")");
  CHECK(emitted <= exact_total);
}

TEST_CASE("h=2 guard: 'w > k' covers every h=2 pattern, the literal 'k > w' does not") {
  const Weight max_dw = 400;
  auto exact = exact_h3_levels(128, max_dw);
  std::size_t exact_h2 = 0;
  for (auto& [w, set] : exact)
    for (auto& p : set) exact_h2 += p.size() == 2;

  auto count_h2 = [&](bool literal) {
    ApproxIlwoState s;
    s.n_bits = 128;
    s.literal_h2_guard = literal;
    std::size_t c = 0;
    for (Weight dw = 1; dw <= max_dw; ++dw)
      for (const auto& e : approx_next_weight(s)) c += e.hamming_weight() == 2;
    return c;
  };
  std::size_t fixed = count_h2(false), literal = count_h2(true);
  MESSAGE("h=2 coverage up to dw=400: w>k " << fixed << "/" << exact_h2 << ", literal k>w "
          << literal << "/" << exact_h2);
  CHECK(fixed == exact_h2);
  CHECK(literal < exact_h2 / 10);
}

TEST_CASE("UPO compliance of both iLWO generators") {
  for (int n = 2; n <= 10; ++n) {
    CHECK(verify_schedule_serial(ilwo_sequence(n, SIZE_MAX)).compliant());
    CHECK(verify_schedule_serial(approx_sequence(n, SIZE_MAX)).compliant());
  }
  CHECK(verify_schedule(ilwo_sequence(128, 2000)).compliant());
  CHECK(verify_schedule(approx_sequence(128, 2000)).compliant());
}

TEST_CASE("generators reset and clone") {
  IlwoGenerator g(20);
  auto first = take(g, 50);
  auto copy = g.clone();
  CHECK(*copy->next() == *g.next());
  g.reset();
  CHECK(take(g, 50) == first);

  ApproxIlwoGenerator a(128);
  auto afirst = take(a, 50);
  a.reset();
  CHECK(take(a, 50) == afirst);
}
