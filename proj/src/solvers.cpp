#include "cardfair/solvers.hpp"

#include <algorithm>
#include <numeric>

#include "cardfair/errors.hpp"
#include "cardfair/matching.hpp"

namespace cardfair {

namespace {

std::vector<int> argmax_agents(const Instance& instance, int item) {
  std::vector<int> best;
  for (int i = 0; i < instance.n; ++i) {
    if (best.empty() || instance.utilities[i][item] > instance.utilities[best[0]][item]) {
      best.assign(1, i);
    } else if (instance.utilities[i][item] == instance.utilities[best[0]][item]) {
      best.push_back(i);
    }
  }
  return best;
}

// count[j][i] = items of category j currently held by agent i.
std::vector<std::vector<int>> category_counts(const Instance& instance,
                                              const std::vector<int>& owner) {
  std::vector<std::vector<int>> count(instance.num_categories(),
                                      std::vector<int>(instance.n, 0));
  for (int j = 0; j < instance.num_categories(); ++j) {
    for (int g : instance.categories[j].items) {
      if (owner[g] >= 0) ++count[j][owner[g]];
    }
  }
  return count;
}

}  // namespace

SolveResult opt_usw_unconstrained(const Instance& instance) {
  instance.validate();
  const int m = instance.num_items();
  std::vector<int> item_category(m);
  for (int j = 0; j < instance.num_categories(); ++j) {
    for (int g : instance.categories[j].items) item_category[g] = j;
  }

  // Attempt the saturating tie rule: concentrate tied items on the agent
  // that already holds the most in that category, so that ideally every
  // item ends up on an over-cap agent.
  auto assign = [&](bool saturating) {
    std::vector<int> owner(m, -1);
    std::vector<std::vector<int>> count(instance.num_categories(),
                                        std::vector<int>(instance.n, 0));
    for (int g = 0; g < m; ++g) {
      const auto best = argmax_agents(instance, g);
      const int j = item_category[g];
      int pick = best[0];
      if (saturating) {
        for (int i : best) {
          if (count[j][i] > count[j][pick]) pick = i;
        }
      } else {
        for (int i : best) {
          if (count[j][i] < instance.categories[j].cap) {
            pick = i;
            break;
          }
        }
      }
      owner[g] = pick;
      ++count[j][pick];
    }
    return owner;
  };

  std::vector<int> owner = assign(/*saturating=*/true);
  {
    const auto count = category_counts(instance, owner);
    bool saturated = true;
    for (int g = 0; g < m && saturated; ++g) {
      const int j = item_category[g];
      saturated = count[j][owner[g]] > instance.categories[j].cap;
    }
    if (!saturated) owner = assign(/*saturating=*/false);
  }

  SolveResult result;
  result.allocation = allocation_from_assignment(owner, instance.n);
  result.welfare = 0;
  for (int g = 0; g < m; ++g) result.welfare += instance.utilities[owner[g]][g];
  return result;
}

SolveResult opt_usw_cardinal_matching(const Instance& instance) {
  instance.validate();
  const int m = instance.num_items();
  std::vector<int> owner(m, -1);
  Rational welfare = 0;

  for (const auto& cat : instance.categories) {
    const int k = cat.cap;
    const int side = instance.n * k;  // agent copies; >= m_j by feasibility
    std::vector<std::vector<Rational>> w(side, std::vector<Rational>(side, Rational(0)));
    for (int i = 0; i < instance.n; ++i) {
      for (int c = 0; c < k; ++c) {
        for (std::size_t t = 0; t < cat.items.size(); ++t) {
          w[i * k + c][t] = instance.utilities[i][cat.items[t]];
        }
        // columns beyond cat.items.size() are zero-valued dummies
      }
    }
    const MatchingResult matched = max_weight_perfect_matching(w);
    welfare += matched.weight;
    for (int row = 0; row < side; ++row) {
      const int col = matched.match[row];
      if (col < static_cast<int>(cat.items.size())) {
        owner[cat.items[col]] = row / k;
      }
    }
  }

  SolveResult result;
  result.allocation = allocation_from_assignment(owner, instance.n);
  result.welfare = welfare;
  return result;
}

GreedyResult greedy_reassign(const Instance& instance, const Allocation& start,
                             int category) {
  instance.validate();
  if (category < 0 || category >= instance.num_categories()) {
    throw DomainError("unknown category index " + std::to_string(category));
  }
  const int m = instance.num_items();
  std::vector<int> owner = start.owner_map(instance.n, m);
  const auto& cat = instance.categories[category];
  const int k = cat.cap;

  std::vector<int> count(instance.n, 0);
  for (int g : cat.items) ++count[owner[g]];

  GreedyResult result;
  for (;;) {
    bool any_unsatisfied = false;
    int best_item = -1, best_to = -1;
    Rational best_loss;
    for (int g : cat.items) {
      const int from = owner[g];
      if (count[from] <= k) continue;
      any_unsatisfied = true;
      for (int to = 0; to < instance.n; ++to) {
        if (count[to] >= k) continue;
        const Rational loss = instance.utilities[from][g] - instance.utilities[to][g];
        if (best_item == -1 || loss < best_loss ||
            (loss == best_loss && (g < best_item || (g == best_item && to < best_to)))) {
          best_loss = loss;
          best_item = g;
          best_to = to;
        }
      }
    }
    if (!any_unsatisfied) break;
    if (best_item == -1) {
      throw FeasibilityError("greedy reassignment stuck: no below-cap agent available");
    }
    ReassignStep step;
    step.item = best_item;
    step.from_agent = owner[best_item];
    step.to_agent = best_to;
    step.welfare_loss = best_loss;
    result.steps.push_back(step);
    --count[step.from_agent];
    ++count[step.to_agent];
    owner[best_item] = best_to;
  }

  result.allocation = allocation_from_assignment(owner, instance.n);
  return result;
}

Allocation keep_top_k(const Instance& instance, const Allocation& start) {
  instance.validate();
  const int m = instance.num_items();
  std::vector<int> owner = start.owner_map(instance.n, m);

  for (const auto& cat : instance.categories) {
    const int k = cat.cap;
    std::vector<std::vector<int>> held(instance.n);
    for (int g : cat.items) held[owner[g]].push_back(g);

    std::vector<int> surplus;
    for (int i = 0; i < instance.n; ++i) {
      if (static_cast<int>(held[i].size()) <= k) continue;
      // keep the k highest-valued items, ties at the lowest item index
      auto& items = held[i];
      std::stable_sort(items.begin(), items.end(), [&](int a, int b) {
        if (instance.utilities[i][a] != instance.utilities[i][b]) {
          return instance.utilities[i][a] > instance.utilities[i][b];
        }
        return a < b;
      });
      for (std::size_t t = k; t < items.size(); ++t) surplus.push_back(items[t]);
      items.resize(k);
    }
    std::sort(surplus.begin(), surplus.end());

    std::vector<int> count(instance.n, 0);
    for (int i = 0; i < instance.n; ++i) count[i] = static_cast<int>(held[i].size());
    int agent = 0;
    for (int g : surplus) {
      while (agent < instance.n && count[agent] >= k) ++agent;
      if (agent == instance.n) {
        throw FeasibilityError("keep_top_k: surplus exceeds total cap capacity");
      }
      owner[g] = agent;
      ++count[agent];
    }
  }
  return allocation_from_assignment(owner, instance.n);
}

}  // namespace cardfair
