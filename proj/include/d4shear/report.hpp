#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "d4shear/parallel.hpp"

namespace d4shear::verify {

enum class Status { exact_zero, within_tol, failed };
std::string to_string(Status s);

struct Result {
  std::string id;
  std::string paper_ref;  // the formula being checked
  Status status = Status::failed;
  double residual = 0.0;  // term count for exact identities, error for numeric ones
  bool diagnostic = false;  // informative only; never affects the exit code
  std::string note;
};

Result exact_result(std::string id, std::string paper_ref, std::size_t residual_terms, bool expected_zero = true);
/// within-tol iff residual <= tol.
Result numeric_result(std::string id, std::string paper_ref, double residual, double tol);

struct SuiteConfig {
  std::string suite = "all";  // classical | quantum | braid | monodromy | all
  std::uint64_t seed = 0;
  std::size_t samples = 200;
  double abs_tol = 1e-12;
  double rel_tol = 1e-9;
  par::Execution execution = par::Execution::parallel;
  bool timing = false;
};

/// Throws std::invalid_argument for an unknown suite, non-positive
/// tolerances or zero samples.
void validate(const SuiteConfig& cfg);

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::vector<Result> results;
  std::optional<double> elapsed_ms;

  /// True iff no non-diagnostic entry failed.
  bool passed() const;
  nlohmann::json to_json() const;
};

// ---------------------------------------------------------------------------
// Numeric sweeps over seeded samples; serial and parallel give identical results.

struct SweepResult {
  double max_residual = 0.0;
  std::size_t worst_index = 0;
  std::size_t samples = 0;

  friend bool operator==(const SweepResult&, const SweepResult&) = default;
};

/// |phi~(mu(Y))| / (1 + largest monomial), random complex Y and G in [0, 2).
SweepResult sweep_cubic_membership(std::uint64_t seed, std::size_t n, par::Execution exec);
/// EG partials against the evaluated Goldman brackets, relative.
SweepResult sweep_eg_agreement(std::uint64_t seed, std::size_t n, par::Execution exec);
/// KS contraction against the three Goldman right-hand sides and the trace
/// difference, relative.
SweepResult sweep_ks_bracket(std::uint64_t seed, std::size_t n, par::Execution exec);
/// KS antisymmetry {G12,G23} + {G23,G12}, relative.
SweepResult sweep_ks_antisymmetry(std::uint64_t seed, std::size_t n, par::Execution exec);
/// Skein residual on random SL(2,C) pairs, absolute.
SweepResult sweep_skein(std::uint64_t seed, std::size_t n, par::Execution exec);
/// Traces of braid_matrices against act_classical on traces, all four generators, relative.
SweepResult sweep_matrix_braid(std::uint64_t seed, std::size_t n, par::Execution exec);
/// Tr M_inf under both generators, relative.
SweepResult sweep_m_inf_trace(std::uint64_t seed, std::size_t n, par::Execution exec);
/// Displayed flip: G_inf and C before and after, relative.
SweepResult sweep_displayed_flip_invariants(std::uint64_t seed, std::size_t n, par::Execution exec);
/// braid_shear against act_classical on evaluated triples, all four generators, relative.
SweepResult sweep_braid_shear(std::uint64_t seed, std::size_t n, par::Execution exec);
/// Constrained sampling: |Tr M_j - 2 cos(pi theta_j)|, absolute.
SweepResult sweep_constrained_traces(std::uint64_t seed, std::size_t n, par::Execution exec);

Report run_suites(const SuiteConfig& cfg);

std::vector<Result> classical_suite(const SuiteConfig& cfg);
std::vector<Result> quantum_suite(const SuiteConfig& cfg);
std::vector<Result> braid_suite(const SuiteConfig& cfg);
std::vector<Result> monodromy_suite(const SuiteConfig& cfg);

}  // namespace d4shear::verify
