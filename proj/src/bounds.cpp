#include "cardfair/bounds.hpp"

#include <cmath>

#include "cardfair/errors.hpp"

namespace cardfair {

namespace {

// floor(sqrt(p/q)) for positive integers, by integer search; the values
// here are tiny (s <= sqrt(m)).
long long floor_sqrt_ratio(long long p, long long q) {
  long long a = 0;
  while ((a + 1) * (a + 1) * q <= p) ++a;
  return a;
}

void check_canonical(const std::vector<std::pair<int, int>>& pairs) {
  if (pairs.empty()) throw DomainError("category pair list is empty");
  for (const auto& [m, k] : pairs) {
    if (m < 1 || k < 1) throw DomainError("category pairs need m >= 1, k >= 1");
  }
  for (std::size_t j = 1; j < pairs.size(); ++j) {
    const auto& [m0, k0] = pairs[j - 1];
    const auto& [m1, k1] = pairs[j];
    if (static_cast<long long>(k0) * m1 > static_cast<long long>(k1) * m0) {
      throw DomainError("category pairs are not in canonical k/m order");
    }
  }
}

}  // namespace

SingleCatBoundParams SingleCatBoundParams::compute(int m, int k, int n) {
  if (m < 1 || k < 1) throw DomainError("need m >= 1, k >= 1");
  SingleCatBoundParams params;
  params.m = m;
  params.k = k;
  params.n = n;
  params.s = -1.0 + std::sqrt(1.0 + static_cast<double>(m - 1) / k);
  // floor(s) = floor(sqrt((k+m-1)/k)) - 1, computed exactly
  const long long floor_s = floor_sqrt_ratio(k + m - 1, k) - 1;
  params.t = static_cast<int>(std::max<long long>(floor_s, 1));
  if (m > k && (m - 1) % k == 0) {
    const long long csq = static_cast<long long>(m - 1) / k + 1;
    const long long c = floor_sqrt_ratio(csq, 1);
    if (c * c == csq && c >= 2) params.c = static_cast<int>(c);
  }
  return params;
}

MultiCatBoundParams MultiCatBoundParams::compute(
    int n, const std::vector<std::pair<int, int>>& pairs) {
  check_canonical(pairs);
  if (n < 1) throw DomainError("need n >= 1");
  MultiCatBoundParams params;
  params.n = n;
  params.pairs = pairs;
  long long total_items = 0;
  for (const auto& [m, k] : pairs) total_items += m;
  for (const auto& [m, k] : pairs) {
    const long long others = total_items - m;
    params.c_values.push_back(std::max<long long>(n - 1 - others, 0));
  }
  return params;
}

double poc_usw_single(int m, int k) {
  if (m < 1 || k < 1) throw DomainError("need m >= 1, k >= 1");
  if (m <= k) return 1.0;
  return 0.5 * (1.0 + std::sqrt(1.0 + static_cast<double>(m - 1) / k));
}

Rational poc_usw_single_lower_achieved_exact(int m, int k) {
  if (m < 1 || k < 1) throw DomainError("need m >= 1, k >= 1");
  if (m <= k + 1) return Rational(1);
  const auto params = SingleCatBoundParams::compute(m, k);
  const int t = params.t;
  const long long block = (m - 1) / t;
  // (1+t) / (1 + k t / block)
  return Rational(1 + t) / (Rational(1) + Rational(static_cast<long long>(k) * t, block));
}

double poc_usw_single_lower_achieved(int m, int k) {
  return rational_to_double(poc_usw_single_lower_achieved_exact(m, k));
}

Rational poc_esw_single(int m, int n, int k) {
  if (m < 1 || n < 1 || k < 1) throw DomainError("need m, n, k >= 1");
  if (m < n) return Rational(1);
  if (static_cast<long long>(n) * k < m) {
    throw FeasibilityError("poc_esw_single requires n*k >= m");
  }
  const Rational value(m - n + 1, k);
  return value > 1 ? value : Rational(1);
}

Rational poc_usw_two(const std::vector<std::pair<int, int>>& pairs) {
  check_canonical(pairs);
  if (pairs.size() < 2) {
    throw DomainError("poc_usw_two needs at least two categories");
  }
  for (const auto& [m, k] : pairs) {
    if (2LL * k < m) throw FeasibilityError("poc_usw_two requires 2*k_j >= m_j");
  }
  const auto& [m1, k1] = pairs[0];
  const auto& [m2, k2] = pairs[1];
  return Rational(2LL * m1 * m2,
                  static_cast<long long>(m2) * k1 + static_cast<long long>(m1) * k2);
}

Rational poc_usw_multi(const std::vector<std::pair<int, int>>& pairs) {
  check_canonical(pairs);
  const auto& [m1, k1] = pairs[0];
  return Rational(m1, k1);
}

Rational poc_esw_multi(int n, const std::vector<std::pair<int, int>>& pairs) {
  const auto params = MultiCatBoundParams::compute(n, pairs);
  long long tail_items = 0;
  for (std::size_t j = 1; j < pairs.size(); ++j) tail_items += pairs[j].first;
  if (n <= tail_items + 1) {
    return Rational(pairs[0].first, pairs[0].second);
  }
  Rational best = 0;
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    const Rational value(pairs[j].first - params.c_values[j], pairs[j].second);
    if (value > best) best = value;
  }
  return best;
}

}  // namespace cardfair
