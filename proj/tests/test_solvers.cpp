#include <doctest.h>

#include <random>

#include "cardfair/fuzz.hpp"
#include "cardfair/oracle.hpp"
#include "cardfair/solvers.hpp"
#include "test_util.hpp"

using namespace cardfair;
using namespace cardfair::testutil;

namespace {

Instance divisible_worst_case_214() {
  return single_cat(1, {{"1/3", "1/3", "1/3", "0"},
                        {"0", "0", "0", "1"},
                        {"0", "0", "0", "1"},
                        {"0", "0", "0", "1"}});
}

}  // namespace

TEST_CASE("opt_usw_unconstrained") {
  const Instance instance = divisible_worst_case_214();
  const auto r = opt_usw_unconstrained(instance);
  CHECK(r.welfare == 2);
  CHECK(r.allocation.bundles[0] == std::vector<int>{0, 1, 2});
  CHECK(usw(instance, r.allocation) == 2);

  // unique maximizers: no tie rule involved
  const Instance plain = single_cat(2, {{"1/2", "1/4", "1/4"},
                                        {"1/5", "2/5", "2/5"}});
  const auto p = opt_usw_unconstrained(plain);
  CHECK(p.welfare == Rational(1, 2) + Rational(4, 5));
  CHECK(p.allocation.bundles[0] == std::vector<int>{0});
  CHECK(p.allocation.bundles[1] == std::vector<int>{1, 2});
}

TEST_CASE("opt_usw_cardinal_matching on fixed instances") {
  const Instance instance = divisible_worst_case_214();
  const auto r = opt_usw_cardinal_matching(instance);
  CHECK(r.welfare == Rational(4, 3));
  CHECK(is_cardinal(instance, r.allocation));
  CHECK(usw(instance, r.allocation) == Rational(4, 3));

  // cap 2 lets agent 0 keep two block items
  Instance wide = divisible_worst_case_214();
  wide.categories[0].cap = 2;
  const auto w = opt_usw_cardinal_matching(wide);
  CHECK(w.welfare == Rational(5, 3));
  CHECK(is_cardinal(wide, w.allocation));
}

TEST_CASE("opt_usw_cardinal_matching matches the oracle") {
  std::mt19937_64 rng(211);
  for (int it = 0; it < 60; ++it) {
    const int n = 2 + static_cast<int>(rand_below(rng, 2));
    const Instance instance = random_instance(rng, n, 6, 1 + it % 2);
    const auto fast = opt_usw_cardinal_matching(instance);
    const auto slow = opt_brute(instance, Objective::Usw, /*cardinal_only=*/true);
    CHECK(fast.welfare == slow.value);
    CHECK(is_cardinal(instance, fast.allocation));
    CHECK(usw(instance, fast.allocation) == fast.welfare);
  }
}

TEST_CASE("greedy_reassign") {
  const Instance instance = divisible_worst_case_214();
  const auto start = opt_usw_unconstrained(instance);
  const auto g = greedy_reassign(instance, start.allocation, 0);
  CHECK(is_cardinal(instance, g.allocation));
  CHECK(usw(instance, g.allocation) == Rational(4, 3));
  REQUIRE(g.steps.size() == 2);
  // each move sheds a 1/3-valued block item from agent 0
  for (const auto& step : g.steps) {
    CHECK(step.from_agent == 0);
    CHECK(step.welfare_loss == Rational(1, 3));
  }
  CHECK(g.steps[0].item == 0);  // lowest item index first
  CHECK(g.steps[1].item == 1);

  // already-cardinal start: nothing to do
  const auto idle = greedy_reassign(instance, g.allocation, 0);
  CHECK(idle.steps.empty());
  CHECK(idle.allocation.bundles == g.allocation.bundles);
}

TEST_CASE("greedy_reassign picks the cheapest move") {
  // agent 0 over cap with item values 1/2, 3/10, 1/5; receiver values all 0.
  const Instance instance = single_cat(
      2, {{"1/2", "3/10", "1/5"}, {"1/3", "1/3", "1/3"}});
  const auto g = greedy_reassign(instance, alloc({{0, 1, 2}, {}}), 0);
  REQUIRE(g.steps.size() == 1);
  // loss 1/5 - 1/3 < 0 is the smallest: item 2 moves to agent 1
  CHECK(g.steps[0].item == 2);
  CHECK(g.steps[0].to_agent == 1);
  CHECK(g.steps[0].welfare_loss == Rational(1, 5) - Rational(1, 3));
  CHECK(usw(instance, g.allocation) == Rational(1, 2) + Rational(3, 10) + Rational(1, 3));
}

TEST_CASE("keep_top_k") {
  const Instance instance = divisible_worst_case_214();
  const auto out = keep_top_k(instance, alloc({{0, 1, 2}, {3}, {}, {}}));
  CHECK(is_cardinal(instance, out));
  // tie among agent 0's equal items keeps the lowest index
  CHECK(out.bundles[0] == std::vector<int>{0});
  CHECK(out.bundles[1] == std::vector<int>{3});
  CHECK(out.bundles[2] == std::vector<int>{1});
  CHECK(out.bundles[3] == std::vector<int>{2});

  // distinct values: the top items stay
  const Instance ranked = single_cat(2, {{"1/2", "3/10", "1/5"},
                                         {"1/3", "1/3", "1/3"}});
  const auto kept = keep_top_k(ranked, alloc({{0, 1, 2}, {}}));
  CHECK(kept.bundles[0] == std::vector<int>{0, 1});
  CHECK(kept.bundles[1] == std::vector<int>{2});
}

TEST_CASE("keep_top_k is always cardinal on random starts") {
  std::mt19937_64 rng(223);
  for (int it = 0; it < 50; ++it) {
    const int n = 2 + static_cast<int>(rand_below(rng, 2));
    const Instance instance = random_instance(rng, n, 7, 1 + it % 2);
    std::vector<int> assignment(instance.num_items());
    for (auto& a : assignment) a = static_cast<int>(rand_below(rng, n));
    const auto out =
        keep_top_k(instance, allocation_from_assignment(assignment, n));
    CHECK(is_cardinal(instance, out));
  }
}
