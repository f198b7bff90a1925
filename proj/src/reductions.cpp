#include "cardfair/reductions.hpp"

#include <algorithm>

#include "cardfair/errors.hpp"
#include "cardfair/welfare.hpp"

namespace cardfair {

namespace {

Rational bundle_value(const Instance& instance, int agent,
                      const std::vector<int>& items) {
  Rational total = 0;
  for (int g : items) total += instance.utilities[agent][g];
  return total;
}

// Bundle of `agent` restricted to category j under the allocation.
std::vector<int> bundle_in_category(const Instance& instance,
                                    const std::vector<int>& owner, int agent,
                                    int category) {
  std::vector<int> items;
  for (int g : instance.categories[category].items) {
    if (owner[g] == agent) items.push_back(g);
  }
  return items;
}

// Categories where the agent holds strictly more than the cap.
std::vector<int> exceeded_categories(const Instance& instance,
                                     const std::vector<int>& owner, int agent) {
  std::vector<int> result;
  for (int j = 0; j < instance.num_categories(); ++j) {
    const auto bundle = bundle_in_category(instance, owner, agent, j);
    if (static_cast<int>(bundle.size()) > instance.categories[j].cap) {
      result.push_back(j);
    }
  }
  return result;
}

}  // namespace

ReductionResult preprocess_r_agents(const Instance& instance,
                                    const Allocation& opt_alloc) {
  instance.validate();
  if (instance.num_categories() != 1) {
    throw DomainError("preprocess_r_agents expects a single category");
  }
  const auto cls = classify_agents(instance, opt_alloc, 0);
  if (cls.above.empty()) {
    throw DomainError("preprocess_r_agents requires a nonempty set of over-cap agents");
  }

  Rational sum_rt = 0;
  for (int i : cls.below) sum_rt += bundle_value(instance, i, opt_alloc.bundles[i]);
  for (int i : cls.exact) sum_rt += bundle_value(instance, i, opt_alloc.bundles[i]);
  if (sum_rt >= 1) {
    throw DomainError("preprocess_r_agents requires sum over R∪T of u_i(A*_i) < 1");
  }
  const Rational target = Rational(1) - sum_rt;

  std::vector<int> s_items;
  for (int i : cls.above) {
    s_items.insert(s_items.end(), opt_alloc.bundles[i].begin(),
                   opt_alloc.bundles[i].end());
  }

  Instance out = instance;
  for (int j : cls.below) {
    const Rational current = bundle_value(instance, j, s_items);
    if (current == target) continue;
    if (current < target) {
      throw DomainError(
          "preprocess_r_agents: agent's utility on S-bundles is below the target; "
          "opt_alloc is not a utilitarian optimum of a normalized instance");
    }
    const Rational scale = target / current;
    for (int g : s_items) out.utilities[j][g] *= scale;
  }
  out.normalized = false;
  out.validate();
  return {out, "preprocessed R-agents to target " + rational_to_string(target)};
}

ReductionResult reduce_merge_exceeded(const Instance& instance,
                                      const Allocation& opt_alloc) {
  instance.validate();
  if (instance.n != 2) throw DomainError("reduce_merge_exceeded requires n = 2");
  const auto owner = opt_alloc.owner_map(2, instance.num_items());

  Instance out = instance;
  bool changed = false;
  for (int agent = 0; agent < 2; ++agent) {
    const auto exceeded = exceeded_categories(out, owner, agent);
    if (exceeded.size() < 2) continue;
    changed = true;

    // p = argmin_j k_j / |A*_{agent,j}| over exceeded categories, lowest
    // index on ties.
    int p = exceeded[0];
    for (int j : exceeded) {
      const auto bj = bundle_in_category(out, owner, agent, j);
      const auto bp = bundle_in_category(out, owner, agent, p);
      const long long lhs =
          static_cast<long long>(out.categories[j].cap) * bp.size();
      const long long rhs =
          static_cast<long long>(out.categories[p].cap) * bj.size();
      if (lhs < rhs) p = j;
    }

    const auto target_bundle = bundle_in_category(out, owner, agent, p);
    for (int other = 0; other < 2; ++other) {
      Rational extra = 0;
      for (int j : exceeded) {
        if (j == p) continue;
        const auto bundle = bundle_in_category(out, owner, agent, j);
        extra += bundle_value(out, other, bundle);
        for (int g : bundle) out.utilities[other][g] = 0;
      }
      const Rational share = extra / static_cast<long long>(target_bundle.size());
      for (int g : target_bundle) out.utilities[other][g] += share;
    }
  }
  out.validate();
  return {out, changed ? "merged multi-category excess bundles" : "no agent exceeded twice; unchanged"};
}

ReductionResult reduce_zero_nonexceeded(const Instance& instance,
                                        const Allocation& opt_alloc) {
  instance.validate();
  if (instance.n != 2) throw DomainError("reduce_zero_nonexceeded requires n = 2");
  const auto owner = opt_alloc.owner_map(2, instance.num_items());

  Instance out = instance;
  bool changed = false;
  for (int agent = 0; agent < 2; ++agent) {
    const auto exceeded = exceeded_categories(out, owner, agent);
    if (exceeded.size() > 1) {
      throw DomainError("reduce_zero_nonexceeded requires each agent to exceed at most one category");
    }
    if (exceeded.empty()) continue;
    const int home = exceeded[0];
    const auto home_bundle = bundle_in_category(out, owner, agent, home);

    for (int j = 0; j < out.num_categories(); ++j) {
      if (j == home) continue;
      const auto bundle = bundle_in_category(out, owner, agent, j);
      if (bundle.empty()) continue;
      bool worthless = true;
      for (int g : bundle) worthless = worthless && out.utilities[agent][g] == 0;
      if (worthless) continue;
      changed = true;
      for (int other = 0; other < 2; ++other) {
        const Rational amount = bundle_value(out, other, bundle);
        for (int g : bundle) out.utilities[other][g] = 0;
        const Rational share = amount / static_cast<long long>(home_bundle.size());
        for (int g : home_bundle) out.utilities[other][g] += share;
      }
    }
  }
  out.validate();
  return {out, changed ? "folded off-category utility into exceeded categories"
                       : "no off-category utility; unchanged"};
}

ReductionResult reduce_force_exceed(const Instance& instance,
                                    const Allocation& opt_alloc,
                                    const Rational& epsilon) {
  instance.validate();
  if (instance.n != 2) throw DomainError("reduce_force_exceed requires n = 2");
  if (epsilon <= 0) throw DomainError("reduce_force_exceed requires epsilon > 0");
  const auto owner = opt_alloc.owner_map(2, instance.num_items());

  const auto exceeded0 = exceeded_categories(instance, owner, 0);
  const auto exceeded1 = exceeded_categories(instance, owner, 1);
  if (!exceeded0.empty() && !exceeded1.empty()) {
    throw DomainError("reduce_force_exceed requires at most one agent to exceed a cap");
  }
  if (exceeded0.empty() && exceeded1.empty()) {
    throw DomainError("reduce_force_exceed requires exactly one over-cap agent");
  }
  const int holder = exceeded0.empty() ? 1 : 0;  // the over-cap agent
  const int mover = 1 - holder;                  // the agent to be forced over cap
  const int home = (holder == 0 ? exceeded0 : exceeded1)[0];

  // A zero-valued (to both agents) nonempty bundle of the holder in a
  // category it does not exceed; lowest category index.
  std::vector<int> fold_bundle;
  for (int j = 0; j < instance.num_categories() && fold_bundle.empty(); ++j) {
    if (j == home) continue;
    const auto bundle = bundle_in_category(instance, owner, holder, j);
    if (bundle.empty()) continue;
    bool zero_valued = true;
    for (int g : bundle) {
      zero_valued = zero_valued && instance.utilities[mover][g] == 0;
    }
    if (zero_valued) fold_bundle = bundle;
  }
  if (fold_bundle.empty()) {
    throw DomainError("reduce_force_exceed: no zero-valued bundle to perturb towards");
  }

  // The mover's lowest-index positively valued held item.
  int star = -1;
  for (int g = 0; g < instance.num_items() && star == -1; ++g) {
    if (owner[g] == mover && instance.utilities[mover][g] > 0) star = g;
  }
  if (star == -1) {
    throw DomainError("reduce_force_exceed: perturbed agent holds no positively valued item");
  }
  if (epsilon >= instance.utilities[mover][star]) {
    throw DomainError("reduce_force_exceed: epsilon must be below the perturbed item's utility");
  }

  Instance out = instance;
  out.utilities[mover][star] -= epsilon;
  const Rational share = epsilon / static_cast<long long>(fold_bundle.size());
  for (int g : fold_bundle) out.utilities[mover][g] += share;
  out.validate();
  return {out, "shifted " + rational_to_string(epsilon) + " of utility onto a rival bundle"};
}

Rational default_force_epsilon(const Instance& instance) {
  Rational min_positive = 0;
  for (const auto& row : instance.utilities) {
    for (const Rational& u : row) {
      if (u > 0 && (min_positive == 0 || u < min_positive)) min_positive = u;
    }
  }
  if (min_positive == 0) {
    throw DomainError("instance has no positive utility");
  }
  return min_positive / (2LL * (instance.num_items() + 1));
}

}  // namespace cardfair
