#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "cardfair/instance.hpp"
#include "cardfair/welfare.hpp"

namespace cardfair {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

enum class Objective { Usw, Esw };

/// Visits every assignment of items to agents (n^m total) in item-major
/// order with ascending agent index; with cardinal_only, branches that
/// would exceed a category cap are pruned. The callback receives the
/// item -> agent assignment vector. Throws BudgetExceededError when
/// n^m exceeds the budget.
void enumerate_allocations(const Instance& instance, bool cardinal_only,
                           const std::function<void(const std::vector<int>&)>& visit,
                           std::uint64_t budget = kDefaultBudget);

struct BruteResult {
  Rational value;
  Allocation witness;  // first maximizer in enumeration order
};

BruteResult opt_brute(const Instance& instance, Objective objective,
                      bool cardinal_only, std::uint64_t budget = kDefaultBudget);

/// All four optima of one instance plus both price ratios.
struct PocReport {
  Rational opt_usw;
  Rational best_cardinal_usw;
  Rational opt_esw;
  Rational best_cardinal_esw;
  std::optional<Rational> usw_ratio;  // nullopt = infinite
  std::optional<Rational> esw_ratio;
  Allocation opt_usw_witness;
  Allocation best_cardinal_usw_witness;
  Allocation opt_esw_witness;
  Allocation best_cardinal_esw_witness;
};

PocReport empirical_poc(const Instance& instance,
                        std::uint64_t budget = kDefaultBudget);

}  // namespace cardfair
