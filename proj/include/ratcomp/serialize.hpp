// Versioned JSON and text formats for cases, systems, reports and witnesses.
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "ratcomp/apclassify.hpp"
#include "ratcomp/family.hpp"

namespace ratcomp {

using json = nlohmann::json;

inline constexpr const char* kCasesSchema = "ratcomp.cases/1";
inline constexpr const char* kSystemSchema = "ratcomp.system/1";
inline constexpr const char* kReportSchema = "ratcomp.report/1";
inline constexpr const char* kWitnessSchema = "ratcomp.witnesses/1";

json case_to_json(const CaseSpec& c);
CaseSpec case_from_json(const json& j);  // validates

// {"terms": [{"coeff": "p/q", "exps": {"a1": 2, ...}}, ...]}
json mpoly_to_json(const MultiPoly& p);
MultiPoly mpoly_from_json(const json& j);

json system_to_json(const EquationSystem& s);
EquationSystem system_from_json(const json& j);
// One generator per line after a "# <case id>" header.
std::string system_text(const EquationSystem& s);

json family_to_json(const SolutionFamily& f);
SolutionFamily family_from_json(const json& j);
json verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const json& j);

json cases_document(const std::vector<CaseSpec>& cases);
std::vector<CaseSpec> cases_from_document(const json& j);
json systems_document(const std::vector<EquationSystem>& systems);
std::vector<EquationSystem> systems_from_document(const json& j);
json report_document(const ClassificationReport& r);
ClassificationReport report_from_document(const json& j);
json witnesses_document(const std::vector<DecompositionWitness>& ws);
// Every witness is re-verified on import; a bad one throws VerificationError.
std::vector<DecompositionWitness> witnesses_from_document(const json& j);

// cases.json plus systems/<case id>.txt for every regime of n; returns the number of systems written.
std::size_t export_bundle(int n, const std::filesystem::path& dir, const EnumConfig& cfg, int workers = 0);

}  // namespace ratcomp
