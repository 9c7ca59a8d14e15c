#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "lieloop/bialgebra_io.hpp"
#include "lieloop/errors.hpp"
#include "lieloop/suites.hpp"

using namespace lieloop;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFormat = 3;

struct Flags {
  SuiteOptions suite;
  bool json = false;
  bool quiet = false;
  std::string out;
  std::string input;
};

void add_common(CLI::App* app, Flags& f) {
  app->add_option_function<int>("--n", [&f](const int& v) { f.suite.n = v; }, "matrix size n");
  app->add_option_function<int>("--samples", [&f](const int& v) { f.suite.samples = v; }, "random samples per check")
      ->check(CLI::PositiveNumber);
  app->add_option("--seed", f.suite.seed, "base seed")->capture_default_str();
  app->add_option_function<double>("--scale", [&f](const double& v) { f.suite.scale = v; }, "sampling scale")
      ->check(CLI::PositiveNumber);
  app->add_option_function<double>("--tol", [&f](const double& v) { f.suite.tol = v; },
                                   "tolerance for exact matrix/tensor identities")
      ->check(CLI::PositiveNumber);
  app->add_option_function<double>("--fd-step", [&f](const double& v) { f.suite.fd_step = v; }, "finite-difference step")
      ->check(CLI::PositiveNumber);
  app->add_option_function<double>("--radius", [&f](const double& v) { f.suite.radius = v; }, "SH(2) grid radius")
      ->check(CLI::PositiveNumber);
  app->add_flag("--json", f.json, "print the JSON report instead of text");
  app->add_option("--out", f.out, "write the JSON report to this path");
  app->add_flag("--quiet", f.quiet, "no report on stdout");
}

int emit(const VerificationReport& rep, const Flags& f) {
  if (!f.quiet) std::cout << (f.json ? rep.to_json() : rep.to_text());
  if (!f.out.empty()) {
    std::ofstream os(f.out, std::ios::binary);
    if (!os) {
      std::cerr << "error: cannot write " << f.out << "\n";
      return kExitFail;
    }
    os << rep.to_json();
  }
  return rep.all_pass() ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification of Lie loops, quasi-double structures and quasi-Lie bialgebras"};
  app.require_subcommand(1);
  Flags f;

  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub subs[] = {{"verify-loop", "loop axioms, mono-alternativity, tangent commutator"},
                      {"verify-quasi-double", "decomposition of SL(n,C) and the nine group identities"},
                      {"verify-double-algebra", "sl(n,C) split algebra, split Jacobi identities, Akivis algebra"},
                      {"verify-bialgebra", "quasi-Lie bialgebra axioms, big bracket, double"},
                      {"verify-expansions", "third-order expansions against the matrix model"},
                      {"verify-sh2", "quasi-Poisson structure on SH(2)"},
                      {"all", "every suite"}};
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    add_common(sub, f);
    if (std::string(s.name) == "verify-bialgebra")
      sub->add_option("--input", f.input, "bialgebra JSON file")->check(CLI::ExistingFile);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    if (name == "verify-loop") return emit(run_loop_suite(f.suite), f);
    if (name == "verify-quasi-double") return emit(run_quasi_double_suite(f.suite), f);
    if (name == "verify-double-algebra") return emit(run_double_algebra_suite(f.suite), f);
    if (name == "verify-bialgebra") {
      std::optional<BialgebraSpec> spec;
      if (!f.input.empty()) spec = load_bialgebra(f.input);
      return emit(run_bialgebra_suite(f.suite, spec), f);
    }
    if (name == "verify-expansions") return emit(run_expansions_suite(f.suite), f);
    if (name == "verify-sh2") return emit(run_sh2_suite(f.suite), f);
    return emit(run_all(f.suite), f);
  } catch (const FormatError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return kExitFormat;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
