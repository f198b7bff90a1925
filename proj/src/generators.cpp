#include "cardfair/generators.hpp"

#include <numeric>

#include "cardfair/bounds.hpp"
#include "cardfair/errors.hpp"

namespace cardfair {

namespace {

Instance single_category_shell(int n, int m, int k) {
  Instance instance;
  instance.n = n;
  CategorySpec cat;
  cat.id = 0;
  cat.cap = k;
  cat.items.resize(m);
  std::iota(cat.items.begin(), cat.items.end(), 0);
  instance.categories.push_back(std::move(cat));
  instance.utilities.assign(n, std::vector<Rational>(m, Rational(0)));
  return instance;
}

Instance multi_category_shell(int n, const std::vector<std::pair<int, int>>& pairs) {
  Instance instance;
  instance.n = n;
  int m = 0;
  for (const auto& p : pairs) m += p.first;
  int next = 0;
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    CategorySpec cat;
    cat.id = static_cast<int>(j);
    cat.cap = pairs[j].second;
    for (int t = 0; t < pairs[j].first; ++t) cat.items.push_back(next++);
    instance.categories.push_back(std::move(cat));
  }
  instance.utilities.assign(n, std::vector<Rational>(m, Rational(0)));
  return instance;
}

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

}  // namespace

Instance gen_usw_single_divisible(int c, int k, int n) {
  if (c < 2 || k < 1) throw DomainError("gen_usw_single_divisible needs c >= 2, k >= 1");
  const int s = c - 1;
  const long long m = static_cast<long long>(k) * (static_cast<long long>(c) * c - 1) + 1;
  if (n < ceil_div(m, k) || n < s + 1) {
    throw DomainError("gen_usw_single_divisible needs n >= max{ceil(m/k), s+1}");
  }
  Instance instance = single_category_shell(n, static_cast<int>(m), k);
  const long long block = (m - 1) / s;
  for (int i = 0; i < s; ++i) {
    for (long long j = i * block; j < (i + 1) * block; ++j) {
      instance.utilities[i][j] = Rational(s, m - 1);
    }
  }
  for (int i = s; i < n; ++i) instance.utilities[i][m - 1] = 1;
  instance.validate();
  return instance;
}

Instance gen_usw_single_general(int m, int k, int n) {
  if (k < 1 || m - 2 < k) throw DomainError("gen_usw_single_general needs m - 2 >= k >= 1");
  const auto params = SingleCatBoundParams::compute(m, k, n);
  const int t = params.t;
  if (n < ceil_div(m, k) || n < t + 1) {
    throw DomainError("gen_usw_single_general needs n >= max{ceil(m/k), t+1}");
  }
  Instance instance = single_category_shell(n, m, k);
  const long long block = static_cast<long long>(m - 1) / t;
  for (int i = 0; i < t; ++i) {
    for (long long j = i * block; j < (i + 1) * block; ++j) {
      instance.utilities[i][j] = Rational(1, block);
    }
  }
  // items t*block .. m-2 are worthless to everyone
  for (int i = t; i < n; ++i) instance.utilities[i][m - 1] = 1;
  instance.validate();
  return instance;
}

Instance gen_esw_single(int m, int n, int k) {
  if (n < 2 || m < n) throw DomainError("gen_esw_single needs m >= n >= 2");
  if (static_cast<long long>(n) * k < m) {
    throw DomainError("gen_esw_single needs n*k >= m");
  }
  if (m - n + 1 <= k) {
    throw DomainError("gen_esw_single needs m - n + 1 > k (otherwise the price is 1)");
  }
  Instance instance = single_category_shell(n, m, k);
  for (int i = 0; i < n - 1; ++i) instance.utilities[i][i] = 1;
  for (int j = n - 1; j < m; ++j) {
    instance.utilities[n - 1][j] = Rational(1, m - n + 1);
  }
  instance.validate();
  return instance;
}

Instance gen_usw_two(const std::vector<std::pair<int, int>>& pairs) {
  if (pairs.size() < 2) throw DomainError("gen_usw_two needs at least two categories");
  for (const auto& [m, k] : pairs) {
    if (k < 1 || m < 1) throw DomainError("gen_usw_two needs m_j, k_j >= 1");
    if (2LL * k < m) throw DomainError("gen_usw_two needs 2*k_j >= m_j");
  }
  poc_usw_two(pairs);  // canonical-order check
  Instance instance = multi_category_shell(2, pairs);
  for (int agent = 0; agent < 2; ++agent) {
    const auto& items = instance.categories[agent].items;
    for (int g : items) {
      instance.utilities[agent][g] = Rational(1, static_cast<long long>(items.size()));
    }
  }
  instance.validate();
  return instance;
}

Instance gen_usw_multi(int n, int q, int k) {
  if (n < 1 || k < 1 || q < k) throw DomainError("gen_usw_multi needs n >= 1, q >= k >= 1");
  if (q % k != 0) throw DomainError("gen_usw_multi needs k to divide q");
  if (q > static_cast<long long>(n) * k) throw DomainError("gen_usw_multi needs q <= n*k");
  std::vector<std::pair<int, int>> pairs(n, {q, k});
  Instance instance = multi_category_shell(n, pairs);
  for (int i = 0; i < n; ++i) {
    for (int g : instance.categories[i].items) {
      instance.utilities[i][g] = Rational(1, q);
    }
  }
  instance.validate();
  return instance;
}

Instance gen_esw_multi(int n, const std::vector<std::pair<int, int>>& pairs) {
  const auto params = MultiCatBoundParams::compute(n, pairs);
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    if (static_cast<long long>(n) * pairs[j].second < pairs[j].first) {
      throw DomainError("gen_esw_multi needs n*k_j >= m_j");
    }
  }
  const int h = static_cast<int>(pairs.size());
  Instance instance = multi_category_shell(n, pairs);

  long long tail_items = 0;
  for (int j = 1; j < h; ++j) tail_items += pairs[j].first;

  if (n <= tail_items + 1) {
    // Case 1: agent 1 uniform on category 1; agents 2..n each own one
    // unique item from categories 2..h.
    for (int g : instance.categories[0].items) {
      instance.utilities[0][g] = Rational(1, pairs[0].first);
    }
    int agent = 1;
    for (int j = 1; j < h && agent < n; ++j) {
      for (int g : instance.categories[j].items) {
        if (agent >= n) break;
        instance.utilities[agent][g] = 1;
        ++agent;
      }
    }
    if (agent != n) throw DomainError("gen_esw_multi: not enough unit items for all agents");
    instance.validate();
    return instance;
  }

  // Case 2: pick j* maximizing (m_j - c_j)/k_j, lowest index on ties.
  int jstar = 0;
  Rational best(-1);
  for (int j = 0; j < h; ++j) {
    const Rational value(pairs[j].first - params.c_values[j], pairs[j].second);
    if (value > best) {
      best = value;
      jstar = j;
    }
  }

  if (params.c_values[jstar] == 0) {
    // Agents 1..n-1 own one unique item each outside category j*; agent n
    // is uniform on category j*.
    int agent = 0;
    for (int j = 0; j < h; ++j) {
      if (j == jstar) continue;
      for (int g : instance.categories[j].items) {
        if (agent >= n - 1) break;
        instance.utilities[agent][g] = 1;
        ++agent;
      }
    }
    if (agent != n - 1) throw DomainError("gen_esw_multi: not enough unit items for all agents");
    for (int g : instance.categories[jstar].items) {
      instance.utilities[n - 1][g] = Rational(1, pairs[jstar].first);
    }
  } else {
    // c_{j*} > 0: every item outside j* is a unit item for one agent,
    // c_{j*} further agents take unit items inside j*, and the last
    // agent is uniform on the remaining m_{j*} - c_{j*} items.
    int agent = 0;
    for (int j = 0; j < h; ++j) {
      if (j == jstar) continue;
      for (int g : instance.categories[j].items) {
        instance.utilities[agent][g] = 1;
        ++agent;
      }
    }
    const auto& star_items = instance.categories[jstar].items;
    const long long c = params.c_values[jstar];
    for (long long t = 0; t < c; ++t) {
      instance.utilities[agent][star_items[t]] = 1;
      ++agent;
    }
    if (agent != n - 1) throw DomainError("gen_esw_multi: agent count mismatch in case 2");
    const long long rest = pairs[jstar].first - c;
    for (long long t = c; t < static_cast<long long>(star_items.size()); ++t) {
      instance.utilities[n - 1][star_items[t]] = Rational(1, rest);
    }
  }
  instance.validate();
  return instance;
}

}  // namespace cardfair
