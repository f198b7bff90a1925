// cardfair: solve, generate, verify, and sweep price-of-cardinality
// instances. Exit codes: 0 success, 2 input error, 3 enumeration budget
// exceeded, 4 infeasible instance.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cardfair/bounds.hpp"
#include "cardfair/errors.hpp"
#include "cardfair/generators.hpp"
#include "cardfair/json_io.hpp"
#include "cardfair/oracle.hpp"
#include "cardfair/solvers.hpp"
#include "cardfair/sweep.hpp"
#include "cardfair/welfare.hpp"

namespace {

using namespace cardfair;
using nlohmann::json;

std::uint64_t env_budget() {
  if (const char* raw = std::getenv("CARDFAIR_BUDGET")) {
    try {
      return std::stoull(raw);
    } catch (const std::exception&) {
      throw DomainError(std::string("bad CARDFAIR_BUDGET value: ") + raw);
    }
  }
  return kDefaultBudget;
}

std::vector<std::pair<int, int>> parse_pairs(const std::string& text) {
  std::vector<long long> values;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    try {
      values.push_back(std::stoll(token));
    } catch (const std::exception&) {
      throw DomainError("bad --pairs entry: " + token);
    }
  }
  if (values.size() < 2 || values.size() % 2 != 0) {
    throw DomainError("--pairs needs an even-length list m1,k1,m2,k2,...");
  }
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < values.size(); i += 2) {
    pairs.emplace_back(static_cast<int>(values[i]), static_cast<int>(values[i + 1]));
  }
  return pairs;
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw DomainError("cannot write output file: " + out_path);
    out << j.dump(2) << "\n";
  }
}

int run_solve(const std::string& instance_path, const std::string& objective,
              const std::string& mode, std::uint64_t budget,
              const std::string& out_path) {
  const Instance instance = load_instance(instance_path);
  const auto started = std::chrono::steady_clock::now();
  const Objective obj = objective == "esw" ? Objective::Esw : Objective::Usw;

  json result;
  if (mode == "unconstrained") {
    if (obj == Objective::Usw) {
      const SolveResult solved = opt_usw_unconstrained(instance);
      result["welfare"] = rational_to_string(solved.welfare);
      result["allocation"] = allocation_to_json(solved.allocation);
    } else {
      const BruteResult solved = opt_brute(instance, Objective::Esw, false, budget);
      result["welfare"] = rational_to_string(solved.value);
      result["allocation"] = allocation_to_json(solved.witness);
    }
  } else if (mode == "cardinal") {
    if (obj == Objective::Usw) {
      const SolveResult solved = opt_usw_cardinal_matching(instance);
      result["welfare"] = rational_to_string(solved.welfare);
      result["allocation"] = allocation_to_json(solved.allocation);
    } else {
      const BruteResult solved = opt_brute(instance, Objective::Esw, true, budget);
      result["welfare"] = rational_to_string(solved.value);
      result["allocation"] = allocation_to_json(solved.witness);
    }
  } else if (mode == "greedy") {
    Allocation current = opt_usw_unconstrained(instance).allocation;
    json steps = json::array();
    for (int j = 0; j < instance.num_categories(); ++j) {
      const GreedyResult greedy = greedy_reassign(instance, current, j);
      current = greedy.allocation;
      for (const auto& s : steps_to_json(greedy.steps)) steps.push_back(s);
    }
    result["welfare"] = rational_to_string(
        obj == Objective::Usw ? usw(instance, current) : esw(instance, current));
    result["allocation"] = allocation_to_json(current);
    result["steps"] = std::move(steps);
  } else if (mode == "topk") {
    const BruteResult start = opt_brute(instance, Objective::Esw, false, budget);
    const Allocation topk = keep_top_k(instance, start.witness);
    result["welfare"] = rational_to_string(
        obj == Objective::Usw ? usw(instance, topk) : esw(instance, topk));
    result["allocation"] = allocation_to_json(topk);
  } else {
    throw DomainError("unknown solve mode: " + mode);
  }

  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - started;
  result["wall_time_s"] = elapsed.count();
  emit(result, out_path);
  return 0;
}

int run_generate(const std::string& name, int c, int k, int n, int m, int q,
                 const std::string& pairs_text, bool verify,
                 std::uint64_t budget, const std::string& out_path) {
  Instance instance;
  json predicted;
  if (name == "usw-single-divisible") {
    instance = gen_usw_single_divisible(c, k, n);
    predicted["usw_ratio"] = poc_usw_single(instance.num_items(), k);
  } else if (name == "usw-single-general") {
    instance = gen_usw_single_general(m, k, n);
    predicted["usw_ratio"] = poc_usw_single_lower_achieved(m, k);
  } else if (name == "esw-single") {
    instance = gen_esw_single(m, n, k);
    predicted["esw_ratio"] = rational_to_string(poc_esw_single(m, n, k));
  } else if (name == "usw-two") {
    const auto pairs = parse_pairs(pairs_text);
    instance = gen_usw_two(pairs);
    predicted["usw_ratio"] = rational_to_string(poc_usw_two(pairs));
  } else if (name == "usw-multi") {
    instance = gen_usw_multi(n, q, k);
    predicted["usw_ratio"] = rational_to_string(Rational(q, k));
  } else if (name == "esw-multi") {
    const auto pairs = parse_pairs(pairs_text);
    instance = gen_esw_multi(n, pairs);
    predicted["esw_ratio"] = rational_to_string(poc_esw_multi(n, pairs));
  } else {
    throw DomainError("unknown construction: " + name);
  }

  if (!verify) {
    if (out_path.empty()) {
      std::cout << instance_to_json(instance).dump(2) << "\n";
    } else {
      save_instance(instance, out_path);
    }
    return 0;
  }

  const PocReport report = empirical_poc(instance, budget);
  json j;
  j["instance"] = instance_to_json(instance);
  j["report"] = poc_report_to_json(report);
  j["predicted"] = predicted;
  emit(j, out_path);
  return 0;
}

int run_sweep(const std::string& mode, int m, int max_n, int max_m, int per_cell,
              bool seed_given, std::uint64_t seed, const std::string& out_path) {
  if (out_path.empty()) throw DomainError("sweep requires --out PATH");
  std::ofstream out(out_path);
  if (!out) throw DomainError("cannot write output file: " + out_path);
  if (mode == "fig1") {
    write_fig1_csv(out, fig1_rows(m));
  } else if (mode == "fig2") {
    write_fig2_csv(out, fig2_rows(m));
  } else if (mode == "grid") {
    if (!seed_given) throw DomainError("grid mode requires --seed");
    write_grid_csv(out, grid_rows(seed, max_n, max_m, per_cell));
  } else {
    throw DomainError("unknown sweep mode: " + mode);
  }
  return 0;
}

int run_verify(const std::string& instance_path, std::uint64_t budget,
               const std::string& out_path) {
  const Instance instance = load_instance(instance_path);
  const PocReport report = empirical_poc(instance, budget);
  emit(poc_report_to_json(report), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"price-of-cardinality toolkit"};
  app.require_subcommand(1);

  std::string instance_path, objective = "usw", mode = "cardinal", out_path;
  std::uint64_t budget = 0;  // resolved after parse so env applies
  bool budget_given = false;

  auto* solve = app.add_subcommand("solve", "solve an instance JSON file");
  solve->add_option("--instance", instance_path, "instance JSON path")->required();
  solve->add_option("--objective", objective, "usw|esw")
      ->check(CLI::IsMember({"usw", "esw"}));
  solve->add_option("--mode", mode, "cardinal|unconstrained|greedy|topk")
      ->check(CLI::IsMember({"cardinal", "unconstrained", "greedy", "topk"}));
  solve->add_option("--out", out_path, "write JSON here instead of stdout");
  solve->add_option("--budget", budget, "enumeration budget")
      ->each([&](const std::string&) { budget_given = true; });

  std::string gen_name, pairs_text;
  int c = 0, k = 0, n = 0, m = 0, q = 0;
  bool verify_flag = false;
  auto* generate = app.add_subcommand("generate", "emit a worst-case construction");
  generate->add_option("name", gen_name,
                       "usw-single-divisible|usw-single-general|esw-single|"
                       "usw-two|usw-multi|esw-multi")
      ->required();
  generate->add_option("--c", c, "divisibility parameter c");
  generate->add_option("--k", k, "cardinality cap");
  generate->add_option("--n", n, "number of agents");
  generate->add_option("--m", m, "number of items");
  generate->add_option("--q", q, "items per category (usw-multi)");
  generate->add_option("--pairs", pairs_text, "m1,k1,m2,k2,... in canonical order");
  generate->add_flag("--verify", verify_flag, "also run the oracle and report ratios");
  generate->add_option("--out", out_path, "output path");
  generate->add_option("--budget", budget, "enumeration budget")
      ->each([&](const std::string&) { budget_given = true; });

  std::string sweep_mode = "fig1";
  int sweep_m = 50, max_n = 3, max_m = 6, per_cell = 5;
  std::uint64_t seed = 0;
  bool seed_given = false;
  auto* sweep = app.add_subcommand("sweep", "emit CSV curves or fuzz grids");
  sweep->add_option("--mode", sweep_mode, "fig1|fig2|grid")
      ->check(CLI::IsMember({"fig1", "fig2", "grid"}));
  sweep->add_option("--m", sweep_m, "item count for fig1/fig2");
  sweep->add_option("--max-n", max_n, "grid: max agents");
  sweep->add_option("--max-m", max_m, "grid: max items");
  sweep->add_option("--per-cell", per_cell, "grid: instances per cell");
  sweep->add_option("--seed", seed, "grid: RNG seed")
      ->each([&](const std::string&) { seed_given = true; });
  sweep->add_option("--out", out_path, "output CSV path")->required();

  auto* verify = app.add_subcommand("verify", "oracle report for an instance file");
  verify->add_option("--instance", instance_path, "instance JSON path")->required();
  verify->add_option("--out", out_path, "write JSON here instead of stdout");
  verify->add_option("--budget", budget, "enumeration budget")
      ->each([&](const std::string&) { budget_given = true; });

  try {
    app.parse(argc, argv);
    const std::uint64_t effective_budget = budget_given ? budget : env_budget();
    if (solve->parsed()) {
      return run_solve(instance_path, objective, mode, effective_budget, out_path);
    }
    if (generate->parsed()) {
      return run_generate(gen_name, c, k, n, m, q, pairs_text, verify_flag,
                          effective_budget, out_path);
    }
    if (sweep->parsed()) {
      return run_sweep(sweep_mode, sweep_m, max_n, max_m, per_cell, seed_given,
                       seed, out_path);
    }
    return run_verify(instance_path, effective_budget, out_path);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const cardfair::BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const cardfair::FeasibilityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const cardfair::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
