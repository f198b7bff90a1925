#pragma once

#include <string>

#include "cardfair/instance.hpp"

namespace cardfair {

// Executable proof-device transformations. Each keeps the agent count,
// item count, and category structure and returns a new instance with a
// short provenance note. All are restricted to the hypotheses they were
// proved under (n = 2 for the merge/zero/force family).

struct ReductionResult {
  Instance instance;
  std::string note;
};

/// Single category. Scales each below-cap agent's utilities on the
/// over-cap agents' optimal bundles down (uniformly per item) until
/// their total there equals 1 - sum of the non-over-cap agents' own
/// utilities. Output is flagged non-normalized.
ReductionResult preprocess_r_agents(const Instance& instance,
                                    const Allocation& opt_alloc);

/// For an agent exceeding caps in several categories, folds its utility
/// (and the other agent's) from all but the min-ratio category into that
/// category's bundle, uniformly per item.
ReductionResult reduce_merge_exceeded(const Instance& instance,
                                      const Allocation& opt_alloc);

/// For an agent exceeding the cap in exactly one category, zeroes its
/// optimal bundles in other categories and folds the amounts into the
/// exceeded category's bundle.
ReductionResult reduce_zero_nonexceeded(const Instance& instance,
                                        const Allocation& opt_alloc);

/// Perturbs the non-exceeding agent's utilities by epsilon so that it,
/// too, exceeds a cap: its top item loses epsilon, spread uniformly over
/// the other agent's zero-valued bundle in an un-exceeded category.
ReductionResult reduce_force_exceed(const Instance& instance,
                                    const Allocation& opt_alloc,
                                    const Rational& epsilon);

/// Default epsilon: half the minimum positive utility divided by (m+1).
Rational default_force_epsilon(const Instance& instance);

}  // namespace cardfair
