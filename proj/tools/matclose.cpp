#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "matclose/errors.hpp"
#include "matclose/expression.hpp"
#include "matclose/ring_spec.hpp"
#include "matclose/suites.hpp"

namespace {

constexpr int kExitParse = 64;
constexpr int kExitBudget = 65;

// MATCLOSE_BUDGET, if set, replaces the default budget. Returns false when
// the variable is not a positive integer.
bool budget_from_env(std::uint64_t& budget) {
  const char* raw = std::getenv("MATCLOSE_BUDGET");
  if (raw == nullptr) return true;
  const std::string text(raw);
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos || text.size() > 19) return false;
  budget = std::stoull(text);
  return budget > 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matricial closure verifier"};
  app.require_subcommand(1);

  matclose::SuiteConfig config;
  bool json = false;
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "run one proposition suite");
  verify->add_option("suite", config.suite, "suite name (see `list`)")->required();
  verify->add_option("--ring", config.ring, "ring spec, e.g. Z/4, GF(2)xZ/3, M2(GF(2))");
  verify->add_option("--n", config.n, "closure size n");
  verify->add_option("--levels", config.levels, "level bound K");
  verify->add_option("--seed", config.seed, "random seed");
  auto* budget_opt = verify->add_option("--budget", config.budget, "candidate budget");
  verify->add_option("--samples", config.samples, "sample count");
  verify->add_option("--depth", config.depth, "chain depth");
  verify->add_option("--rmax", config.rmax, "largest r for IBN");
  verify->add_option("--smax", config.smax, "largest s for IBN");
  verify->add_option("--module", config.module, "module spec, e.g. 'Z/3 over Z/6'");
  verify->add_option("--module2", config.module2, "second module for the coproduct check");
  verify->add_flag("--json", json, "JSON output");
  verify->add_flag("--timing", timing, "include elapsed times in JSON output");

  auto* list = app.add_subcommand("list", "list suites");

  std::string eval_ring = "MC2(GF(2))";
  std::string expression;
  auto* eval = app.add_subcommand("eval", "evaluate an element expression");
  eval->add_option("--ring", eval_ring, "ring spec");
  eval->add_option("expr", expression, "expression, e.g. '@1 [[1,1],[0,1]] * @1 [[1,0],[1,1]]'")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (*list) {
      for (const auto& row : matclose::list_suites()) std::cout << row.name << " -> " << row.statement << '\n';
      return 0;
    }
    if (*eval) {
      const matclose::Ring ring = matclose::build_ring(eval_ring);
      std::cout << matclose::evaluate(ring, expression).str() << '\n';
      return 0;
    }
    if (budget_opt->count() == 0 && !budget_from_env(config.budget)) {
      std::cerr << "error: MATCLOSE_BUDGET must be a positive integer\n";
      return kExitBudget;
    }
    if (config.budget == 0) {
      std::cerr << "error: --budget must be positive\n";
      return kExitBudget;
    }
    const matclose::SuiteReport report = matclose::run_suite(config);
    std::cout << (json ? matclose::render_json(report, timing) : matclose::render_text(report));
    return report.exit_code();
  } catch (const matclose::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const matclose::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  }
}
