#pragma once
#include <string>
#include <vector>

#include "json.hpp"
#include "segre/engine.hpp"
#include "segre/numeric.hpp"

namespace segre {

using json = nlohmann::ordered_json;

// Exact values travel as strings ("3/2", "1/2+i") so no float rounding touches them.
json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);
json point_to_json(const std::vector<Scalar>& p);
std::vector<Scalar> point_from_json(const json& j);

json variety_to_json(const VarietyRef& v, const std::vector<std::string>& names);
VarietyRef variety_from_json(const json& j, const std::vector<std::string>& names);

// base_names are the x-variables; cycles on P(E) append a1..ar.
json cycle_to_json(const GeneralizedCycle& c, const std::vector<std::string>& base_names);
GeneralizedCycle cycle_from_json(const json& j, const std::vector<std::string>& base_names);

json segre_report_to_json(const SegreReport& r, const std::vector<std::string>& names);
SegreReport segre_report_from_json(const json& j, const std::vector<std::string>& names);

json distinguished_to_json(const std::vector<Distinguished>& d, const std::vector<std::string>& names);
std::vector<Distinguished> distinguished_from_json(const json& j, const std::vector<std::string>& names);

json mass_estimate_to_json(const MassEstimate& m);
MassEstimate mass_estimate_from_json(const json& j);

json morphism_result_to_json(const MorphismResult& r, const std::vector<std::string>& names);

}  // namespace segre
