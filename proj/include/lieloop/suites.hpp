#pragma once

// Verification suites behind the CLI subcommands. Each returns a report whose
// records carry their own tolerances; all_pass() decides the exit status.

#include <cstdint>
#include <optional>
#include <string>

#include "lieloop/quasi_lie_bialgebra.hpp"
#include "lieloop/report.hpp"

namespace lieloop {

struct SuiteOptions {
  std::optional<int> n;             // unset: the suite's default dimensions
  std::optional<int> samples;
  std::uint64_t seed = 1;
  std::optional<double> scale;
  std::optional<double> tol;        // replaces tau_mat for exact matrix/tensor identities
  std::optional<double> fd_step;    // finite-difference step (series and commutator h, field h_v)
  std::optional<double> radius;     // sample grid radius for the SH(2) fields
};

VerificationReport run_loop_suite(const SuiteOptions& opt);
VerificationReport run_quasi_double_suite(const SuiteOptions& opt);
VerificationReport run_double_algebra_suite(const SuiteOptions& opt);
/// With a spec: axioms, big-bracket equations, and (if valid) the double. Without: the
/// sh(2) example plus generated specs.
VerificationReport run_bialgebra_suite(const SuiteOptions& opt, const std::optional<BialgebraSpec>& spec = {});
VerificationReport run_expansions_suite(const SuiteOptions& opt);
VerificationReport run_sh2_suite(const SuiteOptions& opt);
VerificationReport run_all(const SuiteOptions& opt);

/// Generated specs for the axioms / big-bracket equivalence sweep: twists of random Lie
/// cobrackets (valid) and copies with one corrupted tensor (invalid), dims 3 and 4.
struct GeneratedSpec {
  BialgebraSpec spec;
  bool intended_valid = true;
};
std::vector<GeneratedSpec> generate_specs(int count, std::uint64_t seed);

}  // namespace lieloop
