#pragma once

#include <utility>
#include <vector>

#include "cardfair/instance.hpp"
#include "cardfair/welfare.hpp"

namespace cardfair {

/// One move of the greedy reassignment procedure.
struct ReassignStep {
  int item = -1;
  int from_agent = -1;
  int to_agent = -1;
  Rational welfare_loss;  // u_from(item) - u_to(item)
};

struct SolveResult {
  Allocation allocation;
  Rational welfare;
};

/// Unconstrained utilitarian optimum: every item goes to an agent that
/// values it most. Ties are first resolved by a greedy attempt to put
/// all items on agents exceeding their caps; if that attempt fails to
/// saturate, ties favor an agent currently below cap, then the lowest
/// agent index. All tie choices are welfare-equal.
SolveResult opt_usw_unconstrained(const Instance& instance);

/// Utilitarian-optimal cardinal allocation via one maximum-weight
/// perfect matching per category (k_j copies of each agent vs. the
/// category's items padded with zero-valued dummies).
SolveResult opt_usw_cardinal_matching(const Instance& instance);

struct GreedyResult {
  Allocation allocation;
  std::vector<ReassignStep> steps;
};

/// While some agent holds more than k_j items in the given category,
/// moves the single item whose transfer from an over-cap agent to a
/// below-cap agent loses the least welfare. Ties: lowest item index,
/// then lowest destination agent index.
GreedyResult greedy_reassign(const Instance& instance, const Allocation& start,
                             int category);

/// Per category, each over-cap agent keeps its k_j highest-valued items
/// (ties kept at the lowest item index); surplus items go to below-cap
/// agents in increasing agent index order. Result is cardinal.
Allocation keep_top_k(const Instance& instance, const Allocation& start);

}  // namespace cardfair
