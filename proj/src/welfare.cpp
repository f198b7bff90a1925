#include "cardfair/welfare.hpp"

#include <algorithm>
#include <numeric>

#include "cardfair/errors.hpp"

namespace cardfair {

namespace {

std::vector<Rational> bundle_utilities(const Instance& instance,
                                       const Allocation& alloc) {
  alloc.owner_map(instance.n, instance.num_items());  // validity check
  std::vector<Rational> util(instance.n, Rational(0));
  for (int i = 0; i < instance.n; ++i) {
    for (int g : alloc.bundles[i]) util[i] += instance.utilities[i][g];
  }
  return util;
}

}  // namespace

Rational usw(const Instance& instance, const Allocation& alloc) {
  const auto util = bundle_utilities(instance, alloc);
  Rational total = 0;
  for (const Rational& u : util) total += u;
  return total;
}

Rational esw(const Instance& instance, const Allocation& alloc) {
  const auto util = bundle_utilities(instance, alloc);
  return *std::min_element(util.begin(), util.end());
}

bool is_cardinal(const Instance& instance, const Allocation& alloc) {
  const int m = instance.num_items();
  const auto owner = alloc.owner_map(instance.n, m);
  for (const auto& cat : instance.categories) {
    std::vector<int> count(instance.n, 0);
    for (int g : cat.items) {
      if (++count[owner[g]] > cat.cap) return false;
    }
  }
  return true;
}

AgentClassification classify_agents(const Instance& instance,
                                    const Allocation& alloc, int category) {
  if (category < 0 || category >= instance.num_categories()) {
    throw DomainError("unknown category index " + std::to_string(category));
  }
  const auto owner = alloc.owner_map(instance.n, instance.num_items());
  const auto& cat = instance.categories[category];
  std::vector<int> count(instance.n, 0);
  for (int g : cat.items) ++count[owner[g]];

  AgentClassification result;
  for (int i = 0; i < instance.n; ++i) {
    if (count[i] < cat.cap) {
      result.below.push_back(i);
    } else if (count[i] == cat.cap) {
      result.exact.push_back(i);
    } else {
      result.above.push_back(i);
    }
  }
  return result;
}

CanonicalOrderResult canonical_category_order_with_map(const Instance& instance) {
  const int h = instance.num_categories();
  const int m = instance.num_items();

  std::vector<int> order(h);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& ca = instance.categories[a];
    const auto& cb = instance.categories[b];
    // k_a/m_a < k_b/m_b without rationals: cross-multiply.
    const long long lhs = static_cast<long long>(ca.cap) * cb.items.size();
    const long long rhs = static_cast<long long>(cb.cap) * ca.items.size();
    if (lhs != rhs) return lhs < rhs;
    return ca.items.size() < cb.items.size();
  });

  CanonicalOrderResult result;
  result.category_map.assign(h, -1);
  result.item_map.assign(m, -1);

  Instance out;
  out.n = instance.n;
  out.normalized = instance.normalized;
  int next_item = 0;
  for (int pos = 0; pos < h; ++pos) {
    const int old_pos = order[pos];
    result.category_map[old_pos] = pos;
    const auto& cat = instance.categories[old_pos];
    CategorySpec spec;
    spec.id = pos;
    spec.cap = cat.cap;
    for (int g : cat.items) {
      result.item_map[g] = next_item;
      spec.items.push_back(next_item);
      ++next_item;
    }
    out.categories.push_back(std::move(spec));
  }

  out.utilities.assign(instance.n, std::vector<Rational>(m, Rational(0)));
  for (int i = 0; i < instance.n; ++i) {
    for (int g = 0; g < m; ++g) {
      out.utilities[i][result.item_map[g]] = instance.utilities[i][g];
    }
  }
  result.instance = std::move(out);
  return result;
}

Instance canonical_category_order(const Instance& instance) {
  return canonical_category_order_with_map(instance).instance;
}

std::optional<Rational> poc_ratio(const Rational& opt_welfare,
                                  const Rational& best_cardinal_welfare) {
  if (opt_welfare < 0 || best_cardinal_welfare < 0) {
    throw DomainError("poc_ratio requires nonnegative welfare values");
  }
  if (best_cardinal_welfare == 0) {
    if (opt_welfare == 0) return Rational(1);
    return std::nullopt;
  }
  return opt_welfare / best_cardinal_welfare;
}

}  // namespace cardfair
