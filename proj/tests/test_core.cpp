#include <doctest.h>

#include <random>

#include <nlohmann/json.hpp>

#include "cardfair/errors.hpp"
#include "cardfair/fuzz.hpp"
#include "cardfair/json_io.hpp"
#include "cardfair/welfare.hpp"
#include "test_util.hpp"

using namespace cardfair;
using namespace cardfair::testutil;

namespace {

// The divisible lower-bound instance at c=2, k=1, n=4: agent 0 uniform
// on the first three items, everyone else wants only the last one.
Instance divisible_worst_case_214() {
  return single_cat(1, {{"1/3", "1/3", "1/3", "0"},
                        {"0", "0", "0", "1"},
                        {"0", "0", "0", "1"},
                        {"0", "0", "0", "1"}});
}

const Allocation kDivisibleOpt = alloc({{0, 1, 2}, {3}, {}, {}});

}  // namespace

TEST_CASE("usw examples") {
  const Instance identity = single_cat(1, {{"1", "0"}, {"0", "1"}});
  CHECK(usw(identity, alloc({{0}, {1}})) == 2);

  const Instance skew = single_cat(3, {{"1/2", "1/4", "1/4"}, {"1/3", "1/3", "1/3"}});
  CHECK(usw(skew, alloc({{0, 1, 2}, {}})) == 1);

  CHECK(usw(divisible_worst_case_214(), kDivisibleOpt) == 2);
}

TEST_CASE("esw examples") {
  const Instance identity = single_cat(1, {{"1", "0"}, {"0", "1"}});
  CHECK(esw(identity, alloc({{0}, {1}})) == 1);
  CHECK(esw(identity, alloc({{0, 1}, {}})) == 0);

  const Instance ega = single_cat(2, {{"1", "0", "0", "0"},
                                      {"0", "1/3", "1/3", "1/3"}});
  CHECK(esw(ega, alloc({{0}, {1, 2, 3}})) == 1);
}

TEST_CASE("welfare rejects invalid allocations") {
  const Instance identity = single_cat(1, {{"1", "0"}, {"0", "1"}});
  CHECK_THROWS_AS(usw(identity, alloc({{0}, {}})), InvalidAllocationError);
  CHECK_THROWS_AS(usw(identity, alloc({{0, 1}, {1}})), InvalidAllocationError);
  CHECK_THROWS_AS(esw(identity, alloc({{0, 1}})), InvalidAllocationError);
}

TEST_CASE("is_cardinal") {
  const Instance loose = single_cat(2, {{"1/2", "1/2"}, {"1/2", "1/2"}});
  CHECK(is_cardinal(loose, alloc({{0, 1}, {}})));

  const Instance tight = single_cat(1, {{"1/2", "1/2"}, {"1/2", "1/2"}});
  CHECK_FALSE(is_cardinal(tight, alloc({{0, 1}, {}})));

  CHECK_FALSE(is_cardinal(divisible_worst_case_214(), kDivisibleOpt));
}

TEST_CASE("classify_agents") {
  const Instance three = single_cat(1, {{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}});
  const auto even = classify_agents(three, alloc({{0}, {1}, {2}}), 0);
  CHECK(even.below.empty());
  CHECK(even.above.empty());
  CHECK(even.exact == std::vector<int>{0, 1, 2});

  const auto skew = classify_agents(divisible_worst_case_214(), kDivisibleOpt, 0);
  CHECK(skew.above == std::vector<int>{0});
  CHECK(skew.exact == std::vector<int>{1});
  CHECK(skew.below == std::vector<int>{2, 3});

  CHECK_THROWS_AS(classify_agents(three, alloc({{0}, {1}, {2}}), 5), DomainError);
}

TEST_CASE("canonical category order") {
  // ratios 1/2 and 1/4: the (4,1) category must come first
  const Instance two = multi_cat({{2, 1}, {4, 1}},
                                 {{"1/6", "1/6", "1/6", "1/6", "1/6", "1/6"},
                                  {"1/6", "1/6", "1/6", "1/6", "1/6", "1/6"}});
  const auto ordered = canonical_category_order(two);
  CHECK(ordered.categories[0].items.size() == 4);
  CHECK(ordered.categories[1].items.size() == 2);

  // equal ratios 1/2: tie broken towards smaller m
  const Instance tie = multi_cat({{4, 2}, {2, 1}},
                                 {{"1/6", "1/6", "1/6", "1/6", "1/6", "1/6"},
                                  {"1/6", "1/6", "1/6", "1/6", "1/6", "1/6"}});
  const auto tied = canonical_category_order(tie);
  CHECK(tied.categories[0].items.size() == 2);

  const Instance single = single_cat(1, {{"1", "0"}, {"0", "1"}});
  const auto same = canonical_category_order(single);
  CHECK(same.categories.size() == 1);
  CHECK(same.utilities == single.utilities);
}

TEST_CASE("canonical order is idempotent and welfare-preserving") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 30; ++it) {
    const Instance instance = random_instance(rng, 2 + it % 2, 5, 2);
    const auto first = canonical_category_order_with_map(instance);
    const Instance twice = canonical_category_order(first.instance);
    CHECK(twice.utilities == first.instance.utilities);

    // random allocation, permuted through the item map
    std::vector<int> assignment(instance.num_items());
    for (auto& a : assignment) a = static_cast<int>(rand_below(rng, instance.n));
    const Allocation before = allocation_from_assignment(assignment, instance.n);
    std::vector<int> mapped(instance.num_items());
    for (int g = 0; g < instance.num_items(); ++g) {
      mapped[first.item_map[g]] = assignment[g];
    }
    const Allocation after = allocation_from_assignment(mapped, instance.n);
    CHECK(usw(instance, before) == usw(first.instance, after));
    CHECK(esw(instance, before) == esw(first.instance, after));
  }
}

TEST_CASE("poc_ratio") {
  CHECK(*poc_ratio(0, 0) == 1);
  CHECK(*poc_ratio(2, Rational(4, 3)) == Rational(3, 2));
  CHECK(*poc_ratio(1, 1) == 1);
  CHECK_FALSE(poc_ratio(1, 0).has_value());
  CHECK_THROWS_AS(poc_ratio(-1, 1), DomainError);
}

TEST_CASE("instance validation") {
  Instance bad = single_cat(1, {{"1", "0"}, {"0", "1"}});
  bad.categories[0].items = {0, 0};
  CHECK_THROWS_AS(bad.validate(), InvalidInstanceError);

  Instance negative = single_cat(1, {{"2", "-1"}, {"0", "1"}});
  CHECK_THROWS_AS(negative.validate(), InvalidInstanceError);

  Instance off = single_cat(1, {{"1/2", "1/3"}, {"0", "1"}});
  CHECK_THROWS_AS(off.validate(), InvalidInstanceError);
  off.normalized = false;
  CHECK_NOTHROW(off.validate());

  // one agent, cap 1, two items: n*k < m
  Instance infeasible = single_cat(1, {{"1/2", "1/2"}});
  CHECK_THROWS_AS(infeasible.validate(), FeasibilityError);
}

TEST_CASE("welfare invariants on random instances") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 50; ++it) {
    const int n = 2 + static_cast<int>(rand_below(rng, 2));
    const Instance instance = random_instance(rng, n, 6, 1 + it % 2);
    std::vector<int> assignment(instance.num_items());
    for (auto& a : assignment) a = static_cast<int>(rand_below(rng, n));
    const Allocation a = allocation_from_assignment(assignment, n);
    CHECK(esw(instance, a) <= usw(instance, a));
    CHECK(usw(instance, a) <= n);  // normalized rows

    const auto cls = classify_agents(instance, a, 0);
    CHECK(cls.below.size() + cls.exact.size() + cls.above.size() ==
          static_cast<std::size_t>(n));
  }
}

TEST_CASE("instance JSON round trip") {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 20; ++it) {
    const Instance instance = random_instance(rng, 2, 5, 1 + it % 2);
    const Instance back = instance_from_json(instance_to_json(instance));
    CHECK(back.n == instance.n);
    CHECK(back.utilities == instance.utilities);
    CHECK(back.categories.size() == instance.categories.size());
    for (std::size_t j = 0; j < back.categories.size(); ++j) {
      CHECK(back.categories[j].items == instance.categories[j].items);
      CHECK(back.categories[j].cap == instance.categories[j].cap);
    }
    CHECK(back.normalized == instance.normalized);
  }
}
