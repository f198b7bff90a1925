#pragma once

#include <utility>
#include <vector>

#include "cardfair/instance.hpp"

namespace cardfair {

// Worst-case instance constructions. Each generator rejects parameter
// sets violating its preconditions (DomainError) instead of adjusting
// them; every returned instance is normalized and passes validation.

/// Divisible single-category construction: m = k(c^2-1)+1 items, agents
/// 1..s (s = c-1) each uniform on a disjoint block of (m-1)/s items,
/// the rest value only the last item. Achieves the exact single-category
/// utilitarian bound.
Instance gen_usw_single_divisible(int c, int k, int n);

/// General-m variant with t = max{floor(s), 1} block agents over blocks
/// of floor((m-1)/t) items; leftover items are worthless to everyone.
Instance gen_usw_single_general(int m, int k, int n);

/// Egalitarian single-category construction: agents 1..n-1 own one unit
/// item each, agent n is uniform on the remaining m-n+1 items.
Instance gen_esw_single(int m, int n, int k);

/// Two agents: agent 1 uniform on category 1, agent 2 uniform on
/// category 2, zero elsewhere. pairs = (m_j, k_j) in canonical order.
Instance gen_usw_two(const std::vector<std::pair<int, int>>& pairs);

/// n categories of q items each with cap k (k | q); agent i uniform on
/// category i.
Instance gen_usw_multi(int n, int q, int k);

/// Multi-category egalitarian construction; picks the case / subcase
/// matching the regime of poc_esw_multi(n, pairs).
Instance gen_esw_multi(int n, const std::vector<std::pair<int, int>>& pairs);

}  // namespace cardfair
