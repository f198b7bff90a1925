#include "cardfair/instance.hpp"

#include <algorithm>

#include "cardfair/errors.hpp"

namespace cardfair {

int Instance::num_items() const {
  std::size_t m = 0;
  for (const auto& cat : categories) m += cat.items.size();
  return static_cast<int>(m);
}

int Instance::category_of(int item) const {
  for (std::size_t j = 0; j < categories.size(); ++j) {
    const auto& items = categories[j].items;
    if (std::find(items.begin(), items.end(), item) != items.end()) {
      return static_cast<int>(j);
    }
  }
  throw DomainError("item index " + std::to_string(item) + " not in any category");
}

void Instance::validate() const {
  if (n < 1) throw InvalidInstanceError("instance needs at least one agent");
  if (categories.empty()) throw InvalidInstanceError("instance needs at least one category");

  const int m = num_items();
  std::vector<char> seen(m, 0);
  for (const auto& cat : categories) {
    if (cat.items.empty()) {
      throw InvalidInstanceError("category " + std::to_string(cat.id) + " has no items");
    }
    if (cat.cap < 1) {
      throw InvalidInstanceError("category " + std::to_string(cat.id) + " has cap < 1");
    }
    for (int g : cat.items) {
      if (g < 0 || g >= m) {
        throw InvalidInstanceError("item index out of range: " + std::to_string(g));
      }
      if (seen[g]) {
        throw InvalidInstanceError("item " + std::to_string(g) + " appears in two categories");
      }
      seen[g] = 1;
    }
  }
  // seen[] is fully set here: m indices, all in range, no duplicates.

  if (static_cast<int>(utilities.size()) != n) {
    throw InvalidInstanceError("utility matrix must have one row per agent");
  }
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(utilities[i].size()) != m) {
      throw InvalidInstanceError("utility row " + std::to_string(i) + " has wrong length");
    }
    Rational row_sum = 0;
    for (const Rational& u : utilities[i]) {
      if (u < 0) throw InvalidInstanceError("negative utility for agent " + std::to_string(i));
      row_sum += u;
    }
    if (normalized && row_sum != 1) {
      throw InvalidInstanceError("agent " + std::to_string(i) +
                                 " utilities do not sum to 1 in a normalized instance");
    }
  }

  for (const auto& cat : categories) {
    if (static_cast<long long>(n) * cat.cap < static_cast<long long>(cat.items.size())) {
      throw FeasibilityError("category " + std::to_string(cat.id) + ": n*k = " +
                             std::to_string(static_cast<long long>(n) * cat.cap) +
                             " < m_j = " + std::to_string(cat.items.size()));
    }
  }
}

std::vector<int> Allocation::owner_map(int n, int m) const {
  if (static_cast<int>(bundles.size()) != n) {
    throw InvalidAllocationError("allocation must have one bundle per agent");
  }
  std::vector<int> owner(m, -1);
  for (int i = 0; i < n; ++i) {
    for (int g : bundles[i]) {
      if (g < 0 || g >= m) {
        throw InvalidAllocationError("allocated item out of range: " + std::to_string(g));
      }
      if (owner[g] != -1) {
        throw InvalidAllocationError("item " + std::to_string(g) + " allocated twice");
      }
      owner[g] = i;
    }
  }
  for (int g = 0; g < m; ++g) {
    if (owner[g] == -1) {
      throw InvalidAllocationError("item " + std::to_string(g) + " unallocated");
    }
  }
  return owner;
}

Allocation allocation_from_assignment(const std::vector<int>& assignment, int n) {
  Allocation alloc;
  alloc.bundles.assign(n, {});
  for (std::size_t g = 0; g < assignment.size(); ++g) {
    const int agent = assignment[g];
    if (agent < 0 || agent >= n) {
      throw InvalidAllocationError("assignment names agent " + std::to_string(agent));
    }
    alloc.bundles[agent].push_back(static_cast<int>(g));
  }
  return alloc;
}

}  // namespace cardfair
