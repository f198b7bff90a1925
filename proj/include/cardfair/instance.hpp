#pragma once

#include <vector>

#include "cardfair/rational.hpp"

namespace cardfair {

/// One item category with its cardinality cap k_j.
struct CategorySpec {
  int id = 0;
  std::vector<int> items;  // global item indices, nonempty
  int cap = 1;             // k_j >= 1
};

/// An allocation problem: n agents, categorized items, utility matrix.
/// Immutable by convention once validated; all operations take it const.
struct Instance {
  int n = 0;
  std::vector<CategorySpec> categories;
  std::vector<std::vector<Rational>> utilities;  // n x m
  bool normalized = true;

  int num_items() const;
  int num_categories() const { return static_cast<int>(categories.size()); }

  /// Category index (position in `categories`) owning a global item index.
  int category_of(int item) const;

  /// Throws InvalidInstanceError on structural problems (items not a
  /// partition, negative utilities, normalized rows not summing to 1)
  /// and FeasibilityError when n * k_j < m_j for some category.
  void validate() const;
};

/// Partition of all items into n bundles, one per agent.
struct Allocation {
  std::vector<std::vector<int>> bundles;  // sorted item indices

  /// item -> agent map; throws InvalidAllocationError if the bundles do
  /// not partition 0..m-1 into n parts.
  std::vector<int> owner_map(int n, int m) const;
};

/// Makes an allocation from an item -> agent assignment vector.
Allocation allocation_from_assignment(const std::vector<int>& assignment, int n);

/// Agents split by how their bundle size in one category compares to
/// that category's cap.
struct AgentClassification {
  std::vector<int> below;  // |A_i ∩ C_j| < k_j   (R)
  std::vector<int> exact;  // = k_j               (T)
  std::vector<int> above;  // > k_j               (S)
};

}  // namespace cardfair
