#pragma once

#include <random>

#include "cardfair/instance.hpp"

namespace cardfair {

/// Platform-stable uniform draw in [0, bound).
std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t bound);

/// Random normalized instance: per-item utilities drawn from
/// {0,...,12}/12, zero rows resampled, then each row rescaled to sum to
/// exactly 1. Items are split into `categories` contiguous categories;
/// caps are drawn near the feasibility floor ceil(m_j/n) so matching
/// graphs stay small.
Instance random_instance(std::mt19937_64& rng, int n, int m, int categories);

}  // namespace cardfair
