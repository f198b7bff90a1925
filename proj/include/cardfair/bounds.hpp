#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cardfair/rational.hpp"

namespace cardfair {

/// Tolerance used whenever a bound involves a square root and therefore
/// lives in binary64 rather than exact rationals.
inline constexpr double kSqrtTolerance = 1e-9;

/// Derived quantities behind the single-category utilitarian bounds.
struct SingleCatBoundParams {
  int m = 0;
  int k = 1;
  int n = 0;
  double s = 0.0;        // -1 + sqrt(1 + (m-1)/k)
  int t = 1;             // max{floor(s), 1}, floor taken exactly
  std::optional<int> c;  // present iff m = k(c^2 - 1) + 1 for some c >= 2

  static SingleCatBoundParams compute(int m, int k, int n = 0);
};

/// A (m_j, k_j) pair list in canonical order plus the c_j values used by
/// the multi-category egalitarian bound.
struct MultiCatBoundParams {
  int n = 0;
  std::vector<std::pair<int, int>> pairs;  // (m_j, k_j), k_j/m_j nondecreasing
  std::vector<long long> c_values;         // max{n - 1 - sum_{t != j} m_t, 0}

  static MultiCatBoundParams compute(int n,
                                     const std::vector<std::pair<int, int>>& pairs);
};

/// (1 + sqrt(1 + (m-1)/k)) / 2; exactly 1 when m <= k.
double poc_usw_single(int m, int k);

/// The ratio achieved by the general-m lower-bound construction,
/// (1+t) / (1 + k t / floor((m-1)/t)); exactly 1 when m - 1 = k.
double poc_usw_single_lower_achieved(int m, int k);
Rational poc_usw_single_lower_achieved_exact(int m, int k);

/// max{(m-n+1)/k, 1}; 1 when m < n.
Rational poc_esw_single(int m, int n, int k);

/// Two-agent multi-category bound 2 m1 m2 / (m2 k1 + m1 k2). Requires
/// canonical order, h >= 2, and 2 k_j >= m_j for every pair.
Rational poc_usw_two(const std::vector<std::pair<int, int>>& pairs);

/// General-n multi-category bound m1 / k1 (upper bound; tight for
/// equal-ratio n-category families).
Rational poc_usw_multi(const std::vector<std::pair<int, int>>& pairs);

/// Multi-category egalitarian bound: m1/k1 when n <= sum_{j>=2} m_j + 1,
/// else max_j (m_j - c_j)/k_j.
Rational poc_esw_multi(int n, const std::vector<std::pair<int, int>>& pairs);

}  // namespace cardfair
