// ratcomp: enumerate cases, solve systems, sweep progressions, verify families, run demos, export reports.
#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "ratcomp/apclassify.hpp"
#include "ratcomp/groebner.hpp"
#include "ratcomp/parallel.hpp"
#include "ratcomp/serialize.hpp"
#include "ratcomp/verify.hpp"

using namespace ratcomp;

namespace {

constexpr int kOk = 0, kFail = 1, kUsage = 2;

struct Global {
  std::string format = "text";
  int workers = 0;
  std::uint64_t seed = 1;
  std::string out;
};

// All output goes through here so --out redirects everything at once.
struct Sink {
  std::ofstream file;
  std::ostream* os = &std::cout;

  explicit Sink(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw std::runtime_error("cannot write " + path);
    os = &file;
  }
  std::ostream& operator()() { return *os; }
};

SinfMode sinf_of(const std::string& s) { return parse_sinf_mode(s); }

EnumConfig config_of(const std::string& s) {
  if (s == "calibrated") return EnumConfig::calibrated();
  if (s == "exhaustive") return EnumConfig::exhaustive();
  throw CLI::ValidationError("--config", "expected calibrated or exhaustive");
}

std::vector<VarId> parse_vars(const std::string& s) {
  std::vector<VarId> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(VarId::parse(tok));
  return out;
}

int cmd_enumerate(const Global& g, int n, int t, const std::string& ksum, const std::string& sinf,
                  const std::string& cfgname, bool counts) {
  EnumConfig cfg = config_of(cfgname);
  Sink out(g.out);
  if (counts) {
    auto rows = case_count_report(n, cfg);
    if (g.format == "json") {
      json arr = json::array();
      for (const auto& r : rows) {
        json j{{"t", r.t}, {"ksum_zero", r.ksum_zero}, {"sinf", to_string(r.sinf)}, {"count", r.count}};
        j["target"] = r.target ? json(*r.target) : json(nullptr);
        arr.push_back(j);
      }
      out() << json{{"n", n}, {"config", cfg.str()}, {"rows", arr}}.dump(2) << "\n";
    } else {
      out() << "case counts, n=" << n << "; " << cfg.str() << "\n";
      for (const auto& r : rows)
        out() << "  t=" << r.t << " " << (r.ksum_zero ? "zero" : "nonzero") << " s_inf " << to_string(r.sinf) << ": "
              << r.count << (r.target ? " (target " + std::to_string(*r.target) + ")" : "") << "\n";
    }
    return kOk;
  }
  std::vector<CaseSpec> cases;
  if (t > 0) {
    cases = enum_cases(n, t, ksum == "zero", sinf_of(sinf), cfg);
  } else {
    for (const auto& r : regimes(n)) {
      auto cs = enum_cases(n, r.t, r.ksum_zero, r.sinf, cfg);
      cases.insert(cases.end(), cs.begin(), cs.end());
    }
  }
  if (g.format == "json") {
    out() << cases_document(cases).dump(2) << "\n";
  } else {
    for (const auto& c : cases) out() << c.id() << "\n";
    out() << cases.size() << " cases\n";
  }
  return kOk;
}

int cmd_solve(const Global& g, const std::string& id, const std::string& order, const std::string& elim, bool distinct) {
  CaseSpec c = CaseSpec::parse_id(id);
  c.validate();
  EquationSystem sys = build_system(c);
  std::vector<MultiPoly> basis;
  std::string label;
  if (!elim.empty()) {
    EliminateOptions opt;
    if (distinct) {
      opt.saturate_by = pairwise_differences(alpha_vars(c.n));
      auto bd = pairwise_differences(beta_vars(c.t));
      opt.saturate_by.insert(opt.saturate_by.end(), bd.begin(), bd.end());
    }
    opt.inner = order == "grevlex" ? OrderKind::grevlex : OrderKind::lex;
    basis = eliminate(sys.gens, parse_vars(elim), opt);
    label = "elimination of " + elim;
  } else {
    MonomialOrder ord = order == "grevlex" ? MonomialOrder::grevlex() : MonomialOrder::lex();
    basis = sys.gens.empty() ? basis : buchberger(sys.gens, ord);
    label = "reduced basis, " + ord.str();
  }
  Sink out(g.out);
  if (g.format == "json") {
    json j = system_to_json(sys);
    json b = json::array();
    for (const auto& p : basis) b.push_back(p.str());
    j["schema"] = kSystemSchema;
    j["basis"] = b;
    j["basis_kind"] = label;
    out() << j.dump(2) << "\n";
  } else {
    out() << system_text(sys) << "# " << label << "\n";
    for (const auto& p : basis) out() << p.str() << "\n";
  }
  return kOk;
}

int cmd_classify(const Global& g, int n, const std::string& id, const std::string& T, bool serial) {
  Sink out(g.out);
  if (!id.empty()) {
    CaseSpec c = CaseSpec::parse_id(id);
    std::vector<APAssignment> Ts = T.empty() ? APAssignment::all(c.n) : std::vector<APAssignment>{APAssignment::parse(T)};
    ClassificationReport rep;
    rep.n = c.n;
    rep.config = "single case";
    for (const auto& a : Ts) rep.entries.push_back({c, a, classify_case(c, a)});
    if (g.format == "json") {
      out() << report_document(rep).dump(2) << "\n";
    } else {
      for (const auto& e : rep.entries) {
        out() << e.spec.id() << " T=" << e.T.str() << ": " << to_string(e.verdict.kind) << " ("
              << to_string(e.verdict.reason) << ") " << e.verdict.detail << "\n";
        if (e.verdict.family) {
          for (const auto& [v, p] : e.verdict.family->beta_forms) out() << "    " << v.name() << " = " << p.str() << "\n";
          out() << "    f ~ " << e.verdict.family->exponent_pattern() << "\n";
        }
      }
    }
    return kOk;
  }
  SweepOptions opt;
  opt.workers = g.workers;
  auto t0 = std::chrono::steady_clock::now();
  ClassificationReport rep = serial ? classify_all_serial(n, opt) : classify_all(n, opt);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (g.format == "json")
    out() << report_document(rep).dump(2) << "\n";
  else
    out() << rep.summary_table();
  std::cerr << rep.entries.size() << " entries in " << secs << " s\n";
  return kOk;
}

int cmd_verify(const Global& g, const std::string& family, int samples, const std::string& witness_file) {
  Sink out(g.out);
  if (!witness_file.empty()) {
    std::ifstream in(witness_file);
    if (!in) throw std::runtime_error("cannot read " + witness_file);
    try {
      auto ws = witnesses_from_document(json::parse(in));
      out() << ws.size() << " witnesses re-verified\n";
      return kOk;
    } catch (const VerificationError& e) {
      out() << "FAIL " << e.what() << "\n";
      return kFail;
    }
  }
  SolutionFamily fam;
  if (family == "prop1")
    fam = prop1_family();
  else if (family == "thm2c")
    fam = thm2c_family();
  else if (family == "case2121")
    fam = case2121_family();
  else
    throw CLI::ValidationError("--family", "expected prop1, thm2c or case2121");
  std::mt19937_64 rng(g.seed);
  std::vector<DecompositionWitness> ws;
  int failures = 0;
  for (int i = 0; i < samples; ++i) {
    auto params = random_params(fam, rng);
    auto k = random_k(fam.spec, rng);
    std::string ps;
    for (const auto& [v, x] : params) ps += " " + v.name() + "=" + x.str();
    std::string ks;
    for (long v : k) ks += " " + std::to_string(v);
    try {
      ws.push_back(verify_family(fam, params, k, family + " #" + std::to_string(i)));
      if (g.format == "text") out() << "ok  " << ps << " | k" << ks << "\n";
    } catch (const VerificationError& e) {
      ++failures;
      out() << "FAIL" << ps << " | k" << ks << ": " << e.what() << "\n";
    }
  }
  if (g.format == "json") out() << witnesses_document(ws).dump(2) << "\n";
  else out() << samples - failures << "/" << samples << " instantiations verified\n";
  return failures ? kFail : kOk;
}

int cmd_demo(const Global& g, const std::string& name) {
  std::vector<std::string> names = name == "all" ? demo_names() : std::vector<std::string>{name};
  Sink out(g.out);
  bool ok = true;
  std::vector<DecompositionWitness> ws;
  for (const auto& nm : names) {
    DemoResult r = run_demo(nm);
    ok = ok && r.ok();
    if (g.format == "text") out() << r.str();
    ws.insert(ws.end(), r.witnesses.begin(), r.witnesses.end());
  }
  if (g.format == "json") out() << witnesses_document(ws).dump(2) << "\n";
  return ok ? kOk : kFail;
}

int cmd_report(const Global& g, int n, const std::string& dir, const std::string& cfgname) {
  namespace fs = std::filesystem;
  fs::path root(dir);
  std::size_t ns = export_bundle(n, root, config_of(cfgname), g.workers);
  std::cout << "wrote " << ns << " systems under " << (root / "systems").string() << "\n";
  SweepOptions opt;
  opt.workers = g.workers;
  if (n <= 4) {
    auto rep = classify_all(n, opt);
    std::ofstream(root / "report.json") << report_document(rep).dump(2) << "\n";
    std::ofstream(root / "summary.txt") << rep.summary_table();
    std::cout << "wrote report.json and summary.txt\n";
  }
  std::vector<DecompositionWitness> ws;
  bool ok = true;
  for (const auto& nm : demo_names()) {
    auto r = run_demo(nm);
    if (!r.ok()) std::cerr << "demo " << nm << ": checks failed\n";
    ok = ok && r.ok();
    ws.insert(ws.end(), r.witnesses.begin(), r.witnesses.end());
  }
  std::ofstream(root / "witnesses.json") << witnesses_document(ws).dump(2) << "\n";
  std::cout << "wrote witnesses.json (" << ws.size() << " witnesses)\n";
  return ok ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ratcomp: decompositions of rational functions with few zeros and poles"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--format", g.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--workers", g.workers, "worker threads (default: RATCOMP_WORKERS or all cores)")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", g.seed, "seed for random instantiation");
  app.add_option("--out", g.out, "write output to this file");

  int n = 4, t = 0, samples = 20;
  std::string ksum = "nonzero", sinf = "empty", cfgname = "calibrated", id, T, order = "lex", elim, family = "prop1",
              wfile, demo = "all", dir = "bundle";
  bool counts = false, distinct = false, serial = false;

  auto* en = app.add_subcommand("enumerate", "list decomposition cases");
  en->add_option("--n", n, "number of zeros and poles")->check(CLI::Range(3, 8));
  en->add_option("--t", t, "number of blocks (default: every regime)");
  en->add_option("--ksum", ksum, "nonzero or zero")->check(CLI::IsMember({"nonzero", "zero"}));
  en->add_option("--sinf", sinf, "empty, nonempty or any")->check(CLI::IsMember({"empty", "nonempty", "any"}));
  en->add_option("--config", cfgname, "calibrated or exhaustive")->check(CLI::IsMember({"calibrated", "exhaustive"}));
  en->add_flag("--counts", counts, "per-regime counts against the calibration targets");

  auto* so = app.add_subcommand("solve", "Groebner basis or elimination ideal of one case system");
  so->add_option("--case", id, "case id, e.g. n4-t2-nz-inf-b1,2|3,4-l1,1,1,1")->required();
  so->add_option("--order", order, "lex or grevlex")->check(CLI::IsMember({"lex", "grevlex"}));
  so->add_option("--eliminate", elim, "comma separated variables to eliminate, e.g. b1,b2");
  so->add_flag("--distinct", distinct, "saturate by root and beta differences before eliminating");

  auto* cl = app.add_subcommand("classify-ap", "arithmetic progression sweep");
  cl->add_option("--n", n, "number of zeros and poles")->check(CLI::Range(3, 5));
  cl->add_option("--case", id, "classify a single case");
  cl->add_option("--T", T, "progression positions for --case, e.g. 0,3,1,2");
  cl->add_flag("--serial", serial, "use the single-threaded reference sweep");

  auto* ve = app.add_subcommand("verify", "instantiate and verify a solution family");
  ve->add_option("--family", family, "prop1, thm2c or case2121");
  ve->add_option("--samples", samples, "random instantiations")->check(CLI::PositiveNumber);
  ve->add_option("--witnesses", wfile, "re-verify a witnesses.json file instead");

  auto* de = app.add_subcommand("demo", "worked examples");
  de->add_option("name", demo, "gutierrez-sevilla, ayad, prop1, thm2a, thm2b, thm2c or all");

  auto* re = app.add_subcommand("report", "export cases.json, systems/*.txt, report.json and witnesses.json");
  re->add_option("--n", n, "number of zeros and poles")->check(CLI::Range(3, 5));
  re->add_option("--dir", dir, "output directory");
  re->add_option("--config", cfgname, "calibrated or exhaustive")->check(CLI::IsMember({"calibrated", "exhaustive"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*en) return cmd_enumerate(g, n, t, ksum, sinf, cfgname, counts);
    if (*so) return cmd_solve(g, id, order, elim, distinct);
    if (*cl) return cmd_classify(g, n, id, T, serial);
    if (*ve) return cmd_verify(g, family, samples, wfile);
    if (*de) {
      auto names = demo_names();
      if (demo != "all" && std::find(names.begin(), names.end(), demo) == names.end()) {
        std::cerr << "unknown demo '" << demo << "'\n";
        return kUsage;
      }
      return cmd_demo(g, demo);
    }
    if (*re) return cmd_report(g, n, dir, cfgname);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
