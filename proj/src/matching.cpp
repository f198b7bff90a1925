#include "cardfair/matching.hpp"

#include <vector>

#include "cardfair/errors.hpp"

namespace cardfair {

namespace {

// Kuhn augmenting-path search on the tight-edge subgraph.
bool try_augment(int u, const std::vector<std::vector<int>>& adj,
                 std::vector<char>& visited, std::vector<int>& match_right) {
  for (int v : adj[u]) {
    if (visited[v]) continue;
    visited[v] = 1;
    if (match_right[v] == -1 ||
        try_augment(match_right[v], adj, visited, match_right)) {
      match_right[v] = u;
      return true;
    }
  }
  return false;
}

// Can the rows in `rows` be perfectly matched into unused columns of the
// tight subgraph?
bool perfectly_matchable(const std::vector<int>& rows,
                         const std::vector<std::vector<int>>& adj, int cols) {
  std::vector<int> match_right(cols, -1);
  for (int u : rows) {
    std::vector<char> visited(cols, 0);
    if (!try_augment(u, adj, visited, match_right)) return false;
  }
  return true;
}

}  // namespace

MatchingResult max_weight_perfect_matching(
    const std::vector<std::vector<Rational>>& weights) {
  if (weights.empty()) throw DomainError("matching weight matrix is empty");
  const int n = static_cast<int>(weights.size());
  if (n == 0) return {Rational(0), {}};
  for (const auto& row : weights) {
    if (static_cast<int>(row.size()) != n) {
      throw DomainError("matching weight matrix must be square");
    }
  }

  // Hungarian algorithm on cost = -weight, 1-indexed, exact rationals.
  Rational inf = 1;
  std::vector<std::vector<Rational>> cost(n + 1, std::vector<Rational>(n + 1, Rational(0)));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      cost[i][j] = -weights[i - 1][j - 1];
      inf += abs(cost[i][j]);
    }
  }

  std::vector<Rational> pu(n + 1, Rational(0)), pv(n + 1, Rational(0));
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<Rational> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      int j1 = -1;
      Rational delta = inf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        Rational cur = cost[i0][j] - pu[i0] - pv[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          pu[p[j]] += delta;
          pv[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  // The final potentials are optimal duals: every maximum-weight perfect
  // matching uses only tight edges, and every perfect matching on tight
  // edges is optimal. Pick the lexicographically smallest one.
  std::vector<std::vector<int>> tight(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (cost[i][j] == pu[i] + pv[j]) tight[i - 1].push_back(j - 1);
    }
  }

  MatchingResult result;
  result.match.assign(n, -1);
  std::vector<char> col_used(n, 0);
  for (int u = 0; u < n; ++u) {
    std::vector<int> rest;
    for (int r = u + 1; r < n; ++r) rest.push_back(r);
    bool fixed = false;
    for (int v : tight[u]) {
      if (col_used[v]) continue;
      col_used[v] = 1;
      // Restrict the remaining rows to still-free columns.
      std::vector<std::vector<int>> adj(n);
      for (int r : rest) {
        for (int c : tight[r]) {
          if (!col_used[c]) adj[r].push_back(c);
        }
      }
      if (perfectly_matchable(rest, adj, n)) {
        result.match[u] = v;
        fixed = true;
        break;
      }
      col_used[v] = 0;
    }
    if (!fixed) {
      throw DomainError("internal error: tight subgraph lost perfect matchability");
    }
  }

  result.weight = 0;
  for (int u = 0; u < n; ++u) result.weight += weights[u][result.match[u]];
  return result;
}

}  // namespace cardfair
