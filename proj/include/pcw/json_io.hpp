#pragma once

#include <functional>
#include <string>

#include <json.hpp>

#include "pcw/kernel.hpp"

namespace pcw {

nlohmann::json formula_to_json(const Formula& f);
Formula formula_from_json(const nlohmann::json& j);

// Proof JSON: {"calculus": id, "rule": id, "sequent": "<printed>", "premises": [...]}
// The calculus id appears at the root node only.
nlohmann::json proof_to_json(const Proof& p, const std::string& calculus_id);

using SequentParser = std::function<Sequent(const std::string&)>;
Proof proof_from_json(const nlohmann::json& j, const SequentParser& parse);

// Reads the root "calculus" field.
std::string proof_json_calculus(const nlohmann::json& j);

nlohmann::json report_to_json(const CheckReport& r);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace pcw
