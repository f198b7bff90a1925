#include "cardfair/json_io.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "cardfair/errors.hpp"

namespace cardfair {

using nlohmann::json;

json instance_to_json(const Instance& instance) {
  json j;
  j["n"] = instance.n;
  j["categories"] = json::array();
  for (const auto& cat : instance.categories) {
    j["categories"].push_back({{"id", cat.id}, {"items", cat.items}, {"cap", cat.cap}});
  }
  j["utilities"] = json::array();
  for (const auto& row : instance.utilities) {
    json jrow = json::array();
    for (const auto& u : row) jrow.push_back(rational_to_string(u));
    j["utilities"].push_back(std::move(jrow));
  }
  j["normalized"] = instance.normalized;
  return j;
}

Instance instance_from_json(const json& j) {
  try {
    Instance instance;
    instance.n = j.at("n").get<int>();
    for (const auto& jc : j.at("categories")) {
      CategorySpec cat;
      cat.id = jc.at("id").get<int>();
      cat.items = jc.at("items").get<std::vector<int>>();
      cat.cap = jc.at("cap").get<int>();
      instance.categories.push_back(std::move(cat));
    }
    for (const auto& jrow : j.at("utilities")) {
      std::vector<Rational> row;
      for (const auto& cell : jrow) row.push_back(parse_rational(cell.get<std::string>()));
      instance.utilities.push_back(std::move(row));
    }
    instance.normalized = j.at("normalized").get<bool>();
    instance.validate();
    return instance;
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed instance JSON: ") + e.what());
  }
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open instance file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw DomainError(std::string("instance JSON parse error: ") + e.what());
  }
  return instance_from_json(j);
}

void save_instance(const Instance& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write instance file: " + path);
  out << instance_to_json(instance).dump(2) << "\n";
}

json allocation_to_json(const Allocation& alloc) {
  return json{{"bundles", alloc.bundles}};
}

Allocation allocation_from_json(const json& j) {
  try {
    Allocation alloc;
    alloc.bundles = j.at("bundles").get<std::vector<std::vector<int>>>();
    return alloc;
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed allocation JSON: ") + e.what());
  }
}

json steps_to_json(const std::vector<ReassignStep>& steps) {
  json j = json::array();
  for (const auto& step : steps) {
    j.push_back({{"item", step.item},
                 {"from", step.from_agent},
                 {"to", step.to_agent},
                 {"loss", rational_to_string(step.welfare_loss)}});
  }
  return j;
}

json poc_report_to_json(const PocReport& report) {
  auto ratio_str = [](const std::optional<Rational>& r) {
    return r ? rational_to_string(*r) : std::string("inf");
  };
  json j;
  j["opt_usw"] = rational_to_string(report.opt_usw);
  j["best_cardinal_usw"] = rational_to_string(report.best_cardinal_usw);
  j["opt_esw"] = rational_to_string(report.opt_esw);
  j["best_cardinal_esw"] = rational_to_string(report.best_cardinal_esw);
  j["usw_ratio"] = ratio_str(report.usw_ratio);
  j["esw_ratio"] = ratio_str(report.esw_ratio);
  j["opt_usw_witness"] = allocation_to_json(report.opt_usw_witness);
  j["best_cardinal_usw_witness"] = allocation_to_json(report.best_cardinal_usw_witness);
  j["opt_esw_witness"] = allocation_to_json(report.opt_esw_witness);
  j["best_cardinal_esw_witness"] = allocation_to_json(report.best_cardinal_esw_witness);
  return j;
}

}  // namespace cardfair
