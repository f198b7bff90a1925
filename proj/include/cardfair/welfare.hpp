#pragma once

#include <optional>
#include <vector>

#include "cardfair/instance.hpp"

namespace cardfair {

/// Utilitarian social welfare: sum over agents of the utility of their
/// own bundle. Exact.
Rational usw(const Instance& instance, const Allocation& alloc);

/// Egalitarian social welfare: utility of the worst-off agent. Exact.
Rational esw(const Instance& instance, const Allocation& alloc);

/// True iff every agent holds at most k_j items of every category j.
bool is_cardinal(const Instance& instance, const Allocation& alloc);

/// Splits agents into below/exact/above relative to the cap of one
/// category. Throws DomainError on an unknown category index.
AgentClassification classify_agents(const Instance& instance,
                                    const Allocation& alloc, int category);

struct CanonicalOrderResult {
  Instance instance;
  std::vector<int> item_map;      // old item index -> new item index
  std::vector<int> category_map;  // old category position -> new position
};

/// Reorders categories so k_j/m_j is nondecreasing, ties broken by
/// smaller m_j first; items are renumbered contiguously in the new
/// order and utility columns permuted to match. Idempotent.
CanonicalOrderResult canonical_category_order_with_map(const Instance& instance);
Instance canonical_category_order(const Instance& instance);

/// opt / best, with the 0/0 -> 1 convention. nullopt signals an
/// infinite ratio (opt > 0, best = 0). Throws DomainError on negative
/// inputs.
std::optional<Rational> poc_ratio(const Rational& opt_welfare,
                                  const Rational& best_cardinal_welfare);

}  // namespace cardfair
