#include <gtest/gtest.h>

#include <omp.h>

#include "d4shear/report.hpp"

using namespace d4shear::verify;
using d4shear::par::Execution;

namespace {

using SweepFn = SweepResult (*)(std::uint64_t, std::size_t, Execution);

struct NamedSweep {
  const char* name;
  SweepFn fn;
  double bound;
};

const NamedSweep kSweeps[] = {
    {"cubic", sweep_cubic_membership, 1e-9},
    {"eg", sweep_eg_agreement, 1e-9},
    {"ks", sweep_ks_bracket, 1e-9},
    {"ks_antisymmetry", sweep_ks_antisymmetry, 1e-9},
    {"skein", sweep_skein, 1e-11},
    {"matrix_braid", sweep_matrix_braid, 1e-9},
    {"m_inf_trace", sweep_m_inf_trace, 1e-9},
    {"displayed_flip", sweep_displayed_flip_invariants, 1e-9},
    {"braid_shear", sweep_braid_shear, 1e-9},
    {"constrained", sweep_constrained_traces, 1e-12},
};

}  // namespace

TEST(Sweeps, SerialEqualsParallelAndWithinBounds) {
  for (const auto& s : kSweeps) {
    const auto serial = s.fn(11, 64, Execution::serial);
    EXPECT_EQ(serial.samples, 64u) << s.name;
    EXPECT_LE(serial.max_residual, s.bound) << s.name;
    for (int threads : {1, 2, 4}) {
      omp_set_num_threads(threads);
      EXPECT_EQ(s.fn(11, 64, Execution::parallel), serial) << s.name << " threads=" << threads;
    }
  }
}

TEST(Sweeps, SeedChangesSamples) {
  EXPECT_NE(sweep_skein(1, 32, Execution::serial).max_residual, sweep_skein(2, 32, Execution::serial).max_residual);
}

TEST(Config, Validation) {
  SuiteConfig cfg;
  EXPECT_NO_THROW(validate(cfg));
  cfg.suite = "bogus";
  EXPECT_THROW(validate(cfg), std::invalid_argument);
  cfg = {};
  cfg.samples = 0;
  EXPECT_THROW(validate(cfg), std::invalid_argument);
  cfg = {};
  cfg.abs_tol = 0.0;
  EXPECT_THROW(validate(cfg), std::invalid_argument);
  cfg = {};
  cfg.rel_tol = -1.0;
  EXPECT_THROW(validate(cfg), std::invalid_argument);
}

TEST(Results, StatusAssignment) {
  EXPECT_EQ(exact_result("a", "x", 0).status, Status::exact_zero);
  EXPECT_EQ(exact_result("a", "x", 3).status, Status::failed);
  EXPECT_EQ(numeric_result("a", "x", 1e-13, 1e-12).status, Status::within_tol);
  EXPECT_EQ(numeric_result("a", "x", 1e-11, 1e-12).status, Status::failed);
  EXPECT_EQ(to_string(Status::within_tol), "within-tol");
}

TEST(Reports, PassedIgnoresDiagnostics) {
  Report r;
  r.results.push_back(exact_result("ok", "x", 0));
  auto diag = exact_result("diag", "x", 2);
  diag.diagnostic = true;
  r.results.push_back(diag);
  EXPECT_TRUE(r.passed());
  r.results.push_back(exact_result("bad", "x", 1));
  EXPECT_FALSE(r.passed());
}

class SuiteRun : public ::testing::Test {
 protected:
  static SuiteConfig config(Execution e) {
    SuiteConfig c;
    c.suite = "classical";
    c.samples = 24;
    c.seed = 5;
    c.execution = e;
    return c;
  }
};

TEST_F(SuiteRun, SchemaAndDeterminism) {
  const auto a = run_suites(config(Execution::parallel));
  const auto j = a.to_json();
  EXPECT_EQ(j.at("schema"), 1);
  EXPECT_EQ(j.at("suite"), "classical");
  EXPECT_EQ(j.at("seed"), 5);
  EXPECT_EQ(j.at("samples"), 24);
  EXPECT_FALSE(j.contains("elapsed_ms"));
  ASSERT_TRUE(j.at("results").is_array());
  for (const auto& r : j.at("results")) {
    for (const char* k : {"id", "paper_ref", "status", "residual"}) EXPECT_TRUE(r.contains(k)) << k;
  }
  EXPECT_TRUE(a.passed());
  EXPECT_EQ(j.dump(), run_suites(config(Execution::serial)).to_json().dump());
}

TEST_F(SuiteRun, TimingAddsElapsed) {
  auto c = config(Execution::parallel);
  c.suite = "quantum";
  c.timing = true;
  EXPECT_TRUE(run_suites(c).to_json().contains("elapsed_ms"));
}

TEST_F(SuiteRun, AllSuitesPass) {
  auto c = config(Execution::parallel);
  c.suite = "all";
  const auto r = run_suites(c);
  EXPECT_TRUE(r.passed());
  for (const auto& x : r.results) {
    if (!x.diagnostic) EXPECT_NE(x.status, Status::failed) << x.id;
  }
}
