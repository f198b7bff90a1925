#include "cardfair/oracle.hpp"

#include <algorithm>

#include "cardfair/errors.hpp"

namespace cardfair {

namespace {

std::uint64_t assignments_required(int n, int m, std::uint64_t budget) {
  BigInt total = 1;
  for (int i = 0; i < m; ++i) total *= n;
  if (total > budget) {
    const std::uint64_t required =
        total > BigInt(UINT64_MAX) ? UINT64_MAX : total.convert_to<std::uint64_t>();
    throw BudgetExceededError(
        "enumeration needs " + total.str() + " assignments, budget is " +
            std::to_string(budget),
        required);
  }
  return total.convert_to<std::uint64_t>();
}

struct Enumerator {
  const Instance& instance;
  bool cardinal_only;
  int n, m;
  std::vector<int> item_category;
  std::vector<int> caps;                // per category
  std::vector<std::vector<int>> count;  // [category][agent]
  std::vector<int> assignment;
  const std::function<void(const std::vector<int>&)>& visit;

  Enumerator(const Instance& inst, bool cardinal,
             const std::function<void(const std::vector<int>&)>& fn)
      : instance(inst), cardinal_only(cardinal), n(inst.n), m(inst.num_items()),
        visit(fn) {
    item_category.resize(m);
    for (int j = 0; j < inst.num_categories(); ++j) {
      caps.push_back(inst.categories[j].cap);
      for (int g : inst.categories[j].items) item_category[g] = j;
    }
    count.assign(inst.num_categories(), std::vector<int>(n, 0));
    assignment.assign(m, -1);
  }

  void run(int item) {
    if (item == m) {
      visit(assignment);
      return;
    }
    const int j = item_category[item];
    for (int agent = 0; agent < n; ++agent) {
      if (cardinal_only && count[j][agent] >= caps[j]) continue;
      assignment[item] = agent;
      ++count[j][agent];
      run(item + 1);
      --count[j][agent];
    }
    assignment[item] = -1;
  }
};

}  // namespace

void enumerate_allocations(const Instance& instance, bool cardinal_only,
                           const std::function<void(const std::vector<int>&)>& visit,
                           std::uint64_t budget) {
  instance.validate();
  assignments_required(instance.n, instance.num_items(), budget);
  Enumerator e(instance, cardinal_only, visit);
  e.run(0);
}

namespace {

// One enumeration pass tracking the maxima of both objectives; the
// witness is the first maximizer in enumeration order.
struct PassResult {
  Rational best_usw = -1;
  Rational best_esw = -1;
  std::vector<int> usw_witness;
  std::vector<int> esw_witness;
};

PassResult best_of_pass(const Instance& instance, bool cardinal_only,
                        std::uint64_t budget) {
  instance.validate();
  assignments_required(instance.n, instance.num_items(), budget);

  const int n = instance.n;
  const int m = instance.num_items();
  std::vector<int> item_category(m);
  std::vector<int> caps;
  for (int j = 0; j < instance.num_categories(); ++j) {
    caps.push_back(instance.categories[j].cap);
    for (int g : instance.categories[j].items) item_category[g] = j;
  }

  PassResult result;
  std::vector<std::vector<int>> count(instance.num_categories(),
                                      std::vector<int>(n, 0));
  std::vector<int> assignment(m, -1);
  std::vector<Rational> agent_util(n, Rational(0));
  Rational total = 0;

  auto recurse = [&](auto&& self, int item) -> void {
    if (item == m) {
      if (total > result.best_usw) {
        result.best_usw = total;
        result.usw_witness = assignment;
      }
      const Rational worst = *std::min_element(agent_util.begin(), agent_util.end());
      if (worst > result.best_esw) {
        result.best_esw = worst;
        result.esw_witness = assignment;
      }
      return;
    }
    const int j = item_category[item];
    for (int agent = 0; agent < n; ++agent) {
      if (cardinal_only && count[j][agent] >= caps[j]) continue;
      const Rational& u = instance.utilities[agent][item];
      assignment[item] = agent;
      ++count[j][agent];
      agent_util[agent] += u;
      total += u;
      self(self, item + 1);
      total -= u;
      agent_util[agent] -= u;
      --count[j][agent];
    }
    assignment[item] = -1;
  };
  recurse(recurse, 0);
  return result;
}

}  // namespace

BruteResult opt_brute(const Instance& instance, Objective objective,
                      bool cardinal_only, std::uint64_t budget) {
  const PassResult pass = best_of_pass(instance, cardinal_only, budget);
  BruteResult result;
  if (objective == Objective::Usw) {
    result.value = pass.best_usw;
    result.witness = allocation_from_assignment(pass.usw_witness, instance.n);
  } else {
    result.value = pass.best_esw;
    result.witness = allocation_from_assignment(pass.esw_witness, instance.n);
  }
  return result;
}

PocReport empirical_poc(const Instance& instance, std::uint64_t budget) {
  const PassResult free_pass = best_of_pass(instance, /*cardinal_only=*/false, budget);
  const PassResult card_pass = best_of_pass(instance, /*cardinal_only=*/true, budget);

  PocReport report;
  report.opt_usw = free_pass.best_usw;
  report.best_cardinal_usw = card_pass.best_usw;
  report.opt_esw = free_pass.best_esw;
  report.best_cardinal_esw = card_pass.best_esw;
  report.usw_ratio = poc_ratio(report.opt_usw, report.best_cardinal_usw);
  report.esw_ratio = poc_ratio(report.opt_esw, report.best_cardinal_esw);
  report.opt_usw_witness = allocation_from_assignment(free_pass.usw_witness, instance.n);
  report.best_cardinal_usw_witness =
      allocation_from_assignment(card_pass.usw_witness, instance.n);
  report.opt_esw_witness = allocation_from_assignment(free_pass.esw_witness, instance.n);
  report.best_cardinal_esw_witness =
      allocation_from_assignment(card_pass.esw_witness, instance.n);
  return report;
}

}  // namespace cardfair
