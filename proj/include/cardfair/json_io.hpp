#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "cardfair/instance.hpp"
#include "cardfair/oracle.hpp"
#include "cardfair/solvers.hpp"

namespace cardfair {

// Instance wire schema:
//   {"n": int,
//    "categories": [{"id": int, "items": [int], "cap": int}],
//    "utilities": [["p/q", ...], ...],
//    "normalized": bool}

nlohmann::json instance_to_json(const Instance& instance);
Instance instance_from_json(const nlohmann::json& j);

Instance load_instance(const std::string& path);
void save_instance(const Instance& instance, const std::string& path);

nlohmann::json allocation_to_json(const Allocation& alloc);
Allocation allocation_from_json(const nlohmann::json& j);

nlohmann::json steps_to_json(const std::vector<ReassignStep>& steps);

nlohmann::json poc_report_to_json(const PocReport& report);

}  // namespace cardfair
