#pragma once

#include <vector>

#include "cardfair/rational.hpp"

namespace cardfair {

struct MatchingResult {
  Rational weight;         // maximum total weight
  std::vector<int> match;  // row -> column
};

/// Exact maximum-weight perfect matching on a square rational weight
/// matrix. Among optimal matchings, returns the one whose (row, column)
/// pairing sequence is lexicographically smallest. Hungarian method
/// with rational potentials; the tie rule is resolved on the tight-edge
/// subgraph implied by the optimal duals.
MatchingResult max_weight_perfect_matching(
    const std::vector<std::vector<Rational>>& weights);

}  // namespace cardfair
