// confcoh: cohomology of Lie conformal algebras from the command line.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>

#include "confcoh/confcoh.hpp"

using namespace confcoh;

namespace {

struct Config {
  std::string algebra = "sv";
  std::string coeff = "trivial:a=0";
  int q_max = 8;
  std::string mode = "filtered";
  int cap = -1;
  std::string format = "table";
  bool skip_axioms = false;
  bool force_oracle = false;
  bool verify = false;
};

const std::set<std::string> kBuiltins = {"vir", "hv", "sv"};

LieConformalAlgebra load_algebra(const Config& cfg, bool check) {
  LieConformalAlgebra alg = [&] {
    if (kBuiltins.count(cfg.algebra)) return builtin(cfg.algebra);
    std::ifstream in(cfg.algebra);
    if (!in) throw std::runtime_error("cannot open algebra file '" + cfg.algebra + "'");
    return parse_algebra(in);
  }();
  if (check && !cfg.skip_axioms && !check_axioms(alg).ok())
    throw AlgebraError("algebra '" + alg.name() + "' fails the axioms (run 'confcoh axioms' for details, or pass --skip-axioms)");
  return alg;
}

EngineOptions engine_options(const Config& cfg) {
  EngineOptions o;
  o.q_max = cfg.q_max;
  if (cfg.mode == "filtered") o.mode = Mode::Filtered;
  else if (cfg.mode == "oracle") o.mode = Mode::Oracle;
  else throw std::invalid_argument("--mode must be filtered or oracle");
  if (cfg.cap >= 0) o.cap = cfg.cap;
  o.force_oracle = cfg.force_oracle;
  if (o.q_max < 0) throw std::invalid_argument("--qmax must be >= 0");
  return o;
}

std::string tuple_name(const LieConformalAlgebra& alg, const std::vector<GenId>& gens) {
  std::string s = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? "," : "") + alg.generator_name(gens[i]);
  return s + ")";
}

int cmd_axioms(const Config& cfg) {
  const LieConformalAlgebra alg = load_algebra(cfg, false);
  const AxiomReport r = check_axioms(alg);
  if (cfg.format == "json") {
    Json j{{"algebra", alg.name()}, {"skew_ok", r.skew_ok}, {"jacobi_ok", r.jacobi_ok}, {"failures", Json::array()}};
    for (const auto& f : r.failures)
      j["failures"].push_back({{"kind", f.kind == AxiomFailure::Kind::Skew ? "skew" : "jacobi"},
                               {"generators", tuple_name(alg, f.generators)},
                               {"residual", to_string(alg, f.residual)}});
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "algebra " << alg.name() << " (" << alg.size() << " generators)\n";
    std::cout << "skew-symmetry   " << (r.skew_ok ? "PASS" : "FAIL") << "\n";
    std::cout << "jacobi identity " << (r.jacobi_ok ? "PASS" : "FAIL") << "\n";
    for (const auto& f : r.failures)
      std::cout << "  FAIL " << (f.kind == AxiomFailure::Kind::Skew ? "skew " : "jacobi ") << tuple_name(alg, f.generators)
                << ": residual " << to_string(alg, f.residual) << "\n";
    std::cout << (r.ok() ? "PASS" : "FAIL") << "\n";
  }
  return r.ok() ? 0 : 1;
}

int cmd_check_module(const Config& cfg) {
  const LieConformalAlgebra alg = load_algebra(cfg, true);
  const CoefficientModule m = parse_coefficients(alg, cfg.coeff);
  const ModuleReport r = check_module_axioms(alg, m);
  std::cout << "module " << m.spec() << " over " << alg.name() << "\n";
  for (const auto& f : r.failures)
    std::cout << "  FAIL pair (" << alg.generator_name(f.a) << "," << alg.generator_name(f.b)
              << "): residual " << to_string(f.residual) << "\n";
  std::cout << (r.ok ? "PASS" : "FAIL") << "\n";
  return r.ok ? 0 : 1;
}

int cmd_table(const Config& cfg) {
  const LieConformalAlgebra alg = load_algebra(cfg, true);
  if (!alg.virasoro() || !weight_table(alg)) {
    std::cerr << "not graded: algebra '" << alg.name() << "' has no weight table\n";
    return 2;
  }
  const auto rows = solution_table(alg);
  if (cfg.format == "json") {
    Json a = Json::array();
    for (const auto& r : rows)
      a.push_back({{"q", r.signature.arity()}, {"counts", r.signature.counts()},
                   {"vandermonde_degree", r.vandermonde_degree}, {"weight_degree", r.weight_degree}});
    std::cout << a.dump(2) << "\n";
  } else {
    std::cout << "q | counts | vandermonde degree | weight degree\n";
    for (const auto& r : rows) std::cout << to_string(r) << "\n";
  }
  return 0;
}

int cmd_cohomology(const Config& cfg, bool reps_only) {
  const LieConformalAlgebra alg = load_algebra(cfg, true);
  const CoefficientModule m = parse_coefficients(alg, cfg.coeff);
  if (!m.is_trivial() && !check_module_axioms(alg, m).ok) {
    std::cerr << "coefficient module " << m.spec() << " fails the module axioms\n";
    return 2;
  }
  CohomologyReport r;
  try {
    r = compute_cohomology(alg, m, engine_options(cfg));
  } catch (const EngineError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 2;
  }
  if (cfg.verify) verify_report(alg, m, r);
  if (cfg.format == "json") {
    Json j = report_to_json(alg, r);
    if (reps_only) j = Json{{"representatives", j["representatives"]}, {"representatives_reduced", j["representatives_reduced"]}};
    std::cout << j.dump(2) << "\n";
  } else if (reps_only) {
    for (const auto& [q, v] : r.representatives)
      for (const auto& c : v) std::cout << "basic   q=" << q << ": " << cochain_to_text(alg, c) << "\n";
    for (const auto& [q, v] : r.representatives_reduced)
      for (const auto& c : v) std::cout << "reduced q=" << q << ": " << cochain_to_text(alg, c) << "\n";
  } else {
    std::cout << report_to_text(alg, r);
  }
  return r.verified ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Basic and reduced cohomology of finite Lie conformal algebras"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--algebra", cfg.algebra, "builtin name (vir, hv, sv) or path to an algebra file")
      ->envname("CONFCOH_ALGEBRA");
  app.add_option("--coeff", cfg.coeff, "trivial:a=<rat> or rank1:alpha=<rat>,beta=<rat>")->envname("CONFCOH_COEFF");
  app.add_option("--qmax", cfg.q_max, "largest arity")->envname("CONFCOH_QMAX");
  app.add_option("--mode", cfg.mode, "filtered or oracle")
      ->check(CLI::IsMember({"filtered", "oracle"}))
      ->envname("CONFCOH_MODE");
  app.add_option("--cap", cfg.cap, "oracle degree cap (default: per arity)")->envname("CONFCOH_CAP");
  app.add_option("--format", cfg.format, "table or json")
      ->check(CLI::IsMember({"table", "json"}))
      ->envname("CONFCOH_FORMAT");
  app.add_flag("--skip-axioms", cfg.skip_axioms, "load algebras that fail the axioms")->envname("CONFCOH_SKIP_AXIOMS");
  app.add_flag("--force-oracle", cfg.force_oracle, "allow truncated oracle runs outside the proven range")
      ->envname("CONFCOH_FORCE_ORACLE");
  app.add_flag("--verify", cfg.verify, "re-check every representative before exiting")->envname("CONFCOH_VERIFY");

  auto* axioms = app.add_subcommand("axioms", "check skew-symmetry and the Jacobi identity")->fallthrough();
  auto* cohomology = app.add_subcommand("cohomology", "basic and reduced cohomology")->fallthrough();
  auto* table = app.add_subcommand("table", "signatures surviving the homotopy filter")->fallthrough();
  auto* reps = app.add_subcommand("representatives", "representative cocycles only")->fallthrough();
  auto* module = app.add_subcommand("check-module", "check the coefficient module axioms")->fallthrough();

  CLI11_PARSE(app, argc, argv);
  try {
    if (axioms->parsed()) return cmd_axioms(cfg);
    if (cohomology->parsed()) return cmd_cohomology(cfg, false);
    if (table->parsed()) return cmd_table(cfg);
    if (reps->parsed()) return cmd_cohomology(cfg, true);
    if (module->parsed()) return cmd_check_module(cfg);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
