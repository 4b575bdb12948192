#include "ratcomp/serialize.hpp"

#include <fstream>
#include <stdexcept>

#include "ratcomp/parallel.hpp"

namespace ratcomp {

namespace {

void expect_schema(const json& j, const char* schema) {
  if (!j.is_object() || !j.contains("schema") || j.at("schema") != schema)
    throw ParseError(std::string("expected schema ") + schema);
}

std::string file_safe(std::string id) {
  for (auto& ch : id)
    if (ch == '|') ch = '_';
  return id;
}

}  // namespace

// ---- cases and polynomials ----

json case_to_json(const CaseSpec& c) {
  return json{{"n", c.n},           {"t", c.t},   {"ksum_zero", c.ksum_zero}, {"s_inf", c.s_inf},
              {"blocks", c.blocks}, {"l", c.l},   {"id", c.id()}};
}

CaseSpec case_from_json(const json& j) {
  CaseSpec c;
  c.n = j.at("n").get<int>();
  c.t = j.at("t").get<int>();
  c.ksum_zero = j.at("ksum_zero").get<bool>();
  c.s_inf = j.at("s_inf").get<std::vector<int>>();
  c.blocks = j.at("blocks").get<std::vector<std::vector<int>>>();
  c.l = j.at("l").get<std::vector<int>>();
  c.validate();
  if (j.contains("id") && j.at("id").get<std::string>() != c.id())
    throw ParseError("case id mismatch: " + j.at("id").get<std::string>() + " vs " + c.id());
  return c;
}

json mpoly_to_json(const MultiPoly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json exps = json::object();
    for (const auto& [v, e] : m.powers()) exps[v.name()] = e;
    terms.push_back({{"coeff", c.str()}, {"exps", exps}});
  }
  return json{{"terms", terms}};
}

MultiPoly mpoly_from_json(const json& j) {
  MultiPoly p;
  for (const auto& t : j.at("terms")) {
    Monomial m;
    for (const auto& [name, e] : t.at("exps").items()) m = m * Monomial(VarId::parse(name), e.get<unsigned>());
    p.add_term(m, Rational::parse(t.at("coeff").get<std::string>()));
  }
  return p;
}

json system_to_json(const EquationSystem& s) {
  json gens = json::array();
  json text = json::array();
  for (const auto& g : s.gens) {
    gens.push_back(mpoly_to_json(g));
    text.push_back(g.str());
  }
  return json{{"case", case_to_json(s.spec)}, {"gens", gens}, {"text", text}};
}

EquationSystem system_from_json(const json& j) {
  EquationSystem s;
  s.spec = case_from_json(j.at("case"));
  for (const auto& g : j.at("gens")) s.gens.push_back(mpoly_from_json(g));
  return s;
}

std::string system_text(const EquationSystem& s) {
  std::string out = "# " + s.spec.id() + "\n";
  for (const auto& g : s.gens) out += g.str() + "\n";
  return out;
}

// ---- families and verdicts ----

json family_to_json(const SolutionFamily& f) {
  json j{{"case", case_to_json(f.spec)}, {"class_key", f.class_key}, {"exponent_pattern", f.exponent_pattern()}};
  if (f.T) j["T"] = *f.T;
  json params = json::array();
  for (const auto& v : f.parameters) params.push_back(v.name());
  j["parameters"] = params;
  json af = json::object(), bf = json::object();
  for (const auto& [v, p] : f.alpha_forms) af[v.name()] = p.str();
  for (const auto& [v, p] : f.beta_forms) bf[v.name()] = p.str();
  j["alpha_forms"] = af;
  j["beta_forms"] = bf;
  json dc = json::array();
  for (const auto& pc : f.d_constraints) dc.push_back({{"N", pc.N}, {"M", pc.M.str()}, {"origin", pc.origin}});
  j["d_constraints"] = dc;
  j["d_relation"] = f.d_relation ? json(f.d_relation->str()) : json(nullptr);
  return j;
}

SolutionFamily family_from_json(const json& j) {
  SolutionFamily f;
  f.spec = case_from_json(j.at("case"));
  f.class_key = j.at("class_key").get<std::string>();
  if (j.contains("T")) f.T = j.at("T").get<std::vector<int>>();
  for (const auto& s : j.at("parameters")) f.parameters.push_back(VarId::parse(s.get<std::string>()));
  for (const auto& [k, v] : j.at("alpha_forms").items()) f.alpha_forms[VarId::parse(k)] = MultiPoly::parse(v.get<std::string>());
  for (const auto& [k, v] : j.at("beta_forms").items()) f.beta_forms[VarId::parse(k)] = MultiPoly::parse(v.get<std::string>());
  for (const auto& pc : j.at("d_constraints"))
    f.d_constraints.push_back({pc.at("N").get<int>(), Rational::parse(pc.at("M").get<std::string>()),
                               pc.at("origin").get<std::string>()});
  if (!j.at("d_relation").is_null()) f.d_relation = MultiPoly::parse(j.at("d_relation").get<std::string>());
  return f;
}

json verdict_to_json(const Verdict& v) {
  json j{{"verdict", to_string(v.kind)}, {"reason", to_string(v.reason)}, {"detail", v.detail}};
  if (v.power) j["power"] = {{"N", v.power->N}, {"M", v.power->M.str()}, {"origin", v.power->origin}};
  if (v.witness_count) j["witness_count"] = *v.witness_count;
  if (v.witness_field) j["witness_field"] = *v.witness_field;
  if (v.family) j["family"] = family_to_json(*v.family);
  return j;
}

Verdict verdict_from_json(const json& j) {
  Verdict v;
  v.kind = parse_verdict_kind(j.at("verdict").get<std::string>());
  v.reason = parse_reason(j.at("reason").get<std::string>());
  v.detail = j.at("detail").get<std::string>();
  if (j.contains("power"))
    v.power = PowerConstraint{j["power"].at("N").get<int>(), Rational::parse(j["power"].at("M").get<std::string>()),
                              j["power"].at("origin").get<std::string>()};
  if (j.contains("witness_count")) v.witness_count = j.at("witness_count").get<int>();
  if (j.contains("witness_field")) v.witness_field = j.at("witness_field").get<std::string>();
  if (j.contains("family")) v.family = family_from_json(j.at("family"));
  return v;
}

// ---- documents ----

json cases_document(const std::vector<CaseSpec>& cases) {
  json arr = json::array();
  for (const auto& c : cases) arr.push_back(case_to_json(c));
  return json{{"schema", kCasesSchema}, {"count", cases.size()}, {"cases", arr}};
}

std::vector<CaseSpec> cases_from_document(const json& j) {
  expect_schema(j, kCasesSchema);
  std::vector<CaseSpec> out;
  for (const auto& c : j.at("cases")) out.push_back(case_from_json(c));
  return out;
}

json systems_document(const std::vector<EquationSystem>& systems) {
  json arr = json::array();
  for (const auto& s : systems) arr.push_back(system_to_json(s));
  return json{{"schema", kSystemSchema}, {"count", systems.size()}, {"systems", arr}};
}

std::vector<EquationSystem> systems_from_document(const json& j) {
  expect_schema(j, kSystemSchema);
  std::vector<EquationSystem> out;
  for (const auto& s : j.at("systems")) out.push_back(system_from_json(s));
  return out;
}

json report_document(const ClassificationReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    json j = verdict_to_json(e.verdict);
    j["case_id"] = e.spec.id();
    j["T"] = e.T.T;
    entries.push_back(std::move(j));
  }
  json classes = json::array();
  for (const auto& fc : r.family_classes())
    classes.push_back({{"key", fc.key}, {"members", fc.members}, {"representative", r.entries[fc.representative].spec.id()}});
  json summary = json::array();
  for (const auto& [k, cnt] : r.summary()) {
    const auto& [reg, kind, reason] = k;
    summary.push_back({{"regime", reg}, {"verdict", kind}, {"reason", reason}, {"count", cnt}});
  }
  json notes = json::array();
  if (auto note = linear_h_note(r.n))
    notes.push_back({{"case_id", note->case_id},
                     {"T", note->T.T},
                     {"verdict", to_string(VerdictKind::TrivialDecomposition)},
                     {"f", note->f.str()},
                     {"g", note->g.str()},
                     {"h", note->h.str()}});
  return json{{"schema", kReportSchema}, {"n", r.n},           {"config", r.config},         {"entries", entries},
              {"summary", summary},      {"family_classes", classes}, {"linear_h_notes", notes}};
}

ClassificationReport report_from_document(const json& j) {
  expect_schema(j, kReportSchema);
  ClassificationReport r;
  r.n = j.at("n").get<int>();
  r.config = j.at("config").get<std::string>();
  for (const auto& e : j.at("entries")) {
    ReportEntry re;
    re.spec = CaseSpec::parse_id(e.at("case_id").get<std::string>());
    re.T = APAssignment{e.at("T").get<std::vector<int>>()};
    re.T.validate(re.spec.n);
    re.verdict = verdict_from_json(e);
    r.entries.push_back(std::move(re));
  }
  return r;
}

json witnesses_document(const std::vector<DecompositionWitness>& ws) {
  json arr = json::array();
  for (const auto& w : ws)
    arr.push_back({{"f", w.f().str()},
                   {"g", w.g().str()},
                   {"h", w.h().str()},
                   {"field", w.field_name()},
                   {"provenance", w.provenance()}});
  return json{{"schema", kWitnessSchema}, {"count", ws.size()}, {"witnesses", arr}};
}

std::vector<DecompositionWitness> witnesses_from_document(const json& j) {
  expect_schema(j, kWitnessSchema);
  std::vector<DecompositionWitness> out;
  for (const auto& w : j.at("witnesses")) {
    auto rf = [&](const char* key) { return parse_rational_function<QuadExt>(w.at(key).get<std::string>()); };
    out.push_back(DecompositionWitness::make(rf("f"), rf("g"), rf("h"), w.at("provenance").get<std::string>()));
  }
  return out;
}

std::size_t export_bundle(int n, const std::filesystem::path& dir, const EnumConfig& cfg, int workers) {
  std::vector<CaseSpec> cases;
  for (const auto& r : regimes(n)) {
    auto cs = enum_cases(n, r.t, r.ksum_zero, r.sinf, cfg);
    cases.insert(cases.end(), cs.begin(), cs.end());
  }
  auto systems = build_all_systems(cases, workers);
  std::filesystem::create_directories(dir / "systems");
  {
    std::ofstream os(dir / "cases.json");
    if (!os) throw std::runtime_error("cannot write " + (dir / "cases.json").string());
    os << cases_document(cases).dump(2) << "\n";
  }
  for (const auto& s : systems) {
    std::ofstream os(dir / "systems" / (file_safe(s.spec.id()) + ".txt"));
    if (!os) throw std::runtime_error("cannot write system file for " + s.spec.id());
    os << system_text(s);
  }
  return systems.size();
}

}  // namespace ratcomp
