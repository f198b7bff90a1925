#include "cardfair/fuzz.hpp"

#include <algorithm>

#include "cardfair/errors.hpp"

namespace cardfair {

std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t bound) {
  // Modulo bias is irrelevant for bounds this small; what matters is
  // identical streams across platforms, which std::uniform_int_distribution
  // does not guarantee.
  return rng() % bound;
}

Instance random_instance(std::mt19937_64& rng, int n, int m, int categories) {
  if (n < 1 || m < 1 || categories < 1 || categories > m) {
    throw DomainError("random_instance: bad shape parameters");
  }

  Instance instance;
  instance.n = n;

  // contiguous category split
  std::vector<int> sizes(categories, 1);
  for (int extra = 0; extra < m - categories; ++extra) {
    ++sizes[rand_below(rng, categories)];
  }
  int next = 0;
  for (int j = 0; j < categories; ++j) {
    CategorySpec cat;
    cat.id = j;
    for (int t = 0; t < sizes[j]; ++t) cat.items.push_back(next++);
    // cap near the feasibility floor so agent-copy graphs stay small
    const int floor_cap = (sizes[j] + n - 1) / n;
    const int slack = static_cast<int>(rand_below(rng, 3));
    cat.cap = std::min(sizes[j], floor_cap + slack);
    instance.categories.push_back(std::move(cat));
  }

  instance.utilities.assign(n, std::vector<Rational>(m, Rational(0)));
  for (int i = 0; i < n; ++i) {
    Rational row_sum = 0;
    do {
      row_sum = 0;
      for (int g = 0; g < m; ++g) {
        instance.utilities[i][g] = Rational(static_cast<long long>(rand_below(rng, 13)), 12);
        row_sum += instance.utilities[i][g];
      }
    } while (row_sum == 0);
    for (int g = 0; g < m; ++g) instance.utilities[i][g] /= row_sum;
  }
  instance.normalized = true;
  instance.validate();
  return instance;
}

}  // namespace cardfair
