#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "d4shear/braid.hpp"
#include "d4shear/complex_literal.hpp"
#include "d4shear/laurent_json.hpp"
#include "d4shear/monodromy.hpp"
#include "d4shear/report.hpp"
#include "d4shear/surface.hpp"

namespace {

using namespace d4shear;
using complex = std::complex<double>;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kConfigError = 2;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json cjson(complex z) { return json::array({z.real(), z.imag()}); }

json cjson(const std::array<complex, 3>& v) { return json::array({cjson(v[0]), cjson(v[1]), cjson(v[2])}); }

json triple_json(const braid::Triple<complex>& t) {
  return {{"G12", cjson(t.g12)}, {"G23", cjson(t.g23)}, {"G13", cjson(t.g13)},
          {"w12", cjson(t.w12)}, {"w23", cjson(t.w23)}, {"w13", cjson(t.w13)}};
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("D4SHEAR_SEED")) {
    try {
      std::size_t used = 0;
      const std::string s(env);
      const auto v = std::stoull(s, &used);
      if (used != s.size()) throw std::invalid_argument("trailing characters");
      return v;
    } catch (const std::exception&) {
      throw ConfigError("D4SHEAR_SEED must be an unsigned integer");
    }
  }
  return 0;
}

void emit(const json& j, const std::string& output) {
  const std::string text = j.dump(2) + "\n";
  if (output.empty() || output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(output, std::ios::binary);
  if (!f) throw ConfigError("cannot open output file " + output);
  f << text;
}

std::array<complex, 3> three(const std::string& text) {
  const auto v = cli::parse_complex_list(text, 3);
  return {v[0], v[1], v[2]};
}

// --------------------------------------------------------------------------

struct VerifyArgs {
  verify::SuiteConfig cfg;
  std::optional<std::uint64_t> seed;
  std::string output;
  bool serial = false;
};

int run_verify(VerifyArgs& a) {
  a.cfg.seed = resolve_seed(a.seed);
  if (a.serial) a.cfg.execution = par::Execution::serial;
  try {
    verify::validate(a.cfg);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  const auto report = verify::run_suites(a.cfg);
  emit(report.to_json(), a.output);
  return report.passed() ? kOk : kFailed;
}

struct EvalArgs {
  std::string y = "0,0,0";
  std::string y1, y2, y3;
  std::string g;
  std::string orbifold;
};

int run_eval(const EvalArgs& a) {
  std::array<complex, 3> y{};
  surface::HoleParams params;
  try {
    y = three(a.y);
    const std::string* single[3] = {&a.y1, &a.y2, &a.y3};
    for (int i = 0; i < 3; ++i) {
      if (!single[i]->empty()) y[i] = cli::parse_complex(*single[i]);
    }
    if (!a.g.empty() && !a.orbifold.empty()) throw ConfigError("--g and --orbifold are exclusive");
    if (!a.orbifold.empty()) {
      std::array<int, 3> orders{};
      const auto v = cli::parse_complex_list(a.orbifold, 3);
      for (int i = 0; i < 3; ++i) {
        if (v[i].imag() != 0.0 || v[i].real() != static_cast<int>(v[i].real())) {
          throw ConfigError("orbifold orders must be integers");
        }
        orders[i] = static_cast<int>(v[i].real());
      }
      params = surface::HoleParams::orbifold(orders);
    } else {
      params = surface::HoleParams::holes(a.g.empty() ? std::array<complex, 3>{} : three(a.g));
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }

  const auto p = surface::mu_eval(y, params);
  const auto leaf = surface::classify_leaf(y, params);
  json j{{"schema", 1},
         {"y", cjson(y)},
         {"g", cjson(params.values())},
         {"u", cjson(p.u)},
         {"v", cjson(p.v)},
         {"w", cjson(p.w)},
         {"r", json::array({cjson(p.r[0]), cjson(p.r[1]), cjson(p.r[2]), cjson(p.r[3])})},
         {"residual", cjson(p.residual)},
         {"residual_abs", std::abs(p.residual)},
         {"casimir", cjson(leaf.casimir)},
         {"eg_bracket", cjson(surface::eg_bracket(p))}};
  if (leaf.on_leaf) {
    j["degenerate_leaf"] = {{"n", leaf.n}, {"note", "degenerate leaf, C in {0,4}"}};
  }
  emit(j, "");
  return kOk;
}

struct BraidArgs {
  std::string word;
  std::string mode = "abstract";
  std::optional<std::uint64_t> seed;
  std::string y, g;
};

json abstract_json(const braid::AbstractTriple& t) {
  return {{"G12", braid::to_string(t.g12)}, {"G23", braid::to_string(t.g23)}, {"G13", braid::to_string(t.g13)},
          {"w12", braid::to_string(t.w12)}, {"w23", braid::to_string(t.w23)}, {"w13", braid::to_string(t.w13)}};
}

double rel_diff(const braid::Triple<complex>& a, const braid::Triple<complex>& b) {
  auto r = [](complex x, complex y) { return std::abs(x - y) / std::max({1.0, std::abs(x), std::abs(y)}); };
  return std::max({r(a.g12, b.g12), r(a.g23, b.g23), r(a.g13, b.g13), r(a.w12, b.w12), r(a.w23, b.w23),
                   r(a.w13, b.w13)});
}

int run_braid(const BraidArgs& a) {
  braid::BraidWord word;
  try {
    word = braid::BraidWord::parse(a.word);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  json j{{"schema", 1}, {"word", word.str()}, {"mode", a.mode}};

  if (a.mode == "abstract") {
    const auto before = braid::symbolic_triple();
    const auto after = braid::act_classical(word, before);
    j["before"] = abstract_json(before);
    j["after"] = abstract_json(after);
    j["identity"] = after == before;
    j["casimir_invariant"] = (braid::central_element(after) - braid::central_element(before)).is_zero();
  } else if (a.mode == "quantum") {
    const auto before = braid::quantum_triple();
    const auto after = braid::act_quantum(word, before);
    const auto qw_after = surface::QuantumOmegas{after.w12, after.w23, after.w13};
    const auto qt_after = surface::QuantumGeodesicTriple{after.g12, after.g23, after.g13};
    const auto qw_before = surface::QuantumOmegas{before.w12, before.w23, before.w13};
    const auto qt_before = surface::QuantumGeodesicTriple{before.g12, before.g23, before.g13};
    const auto c_before = surface::quantum_casimir(qt_before, qw_before, surface::kPrintedCasimirPowers,
                                                   surface::QOrientation::reconciled);
    const auto c_after = surface::quantum_casimir(qt_after, qw_after, surface::kPrintedCasimirPowers,
                                                  surface::QOrientation::reconciled);
    j["after"] = {{"G12", qtorus::to_json(after.g12)}, {"G23", qtorus::to_json(after.g23)},
                  {"G13", qtorus::to_json(after.g13)}};
    j["identity"] = after == before;
    j["casimir_invariant"] = c_after == c_before;
  } else if (a.mode == "matrix") {
    const auto m = monodromy::sample_triple(resolve_seed(a.seed));
    const auto after = monodromy::braid_matrices(m, word);
    const auto tb = monodromy::trace_triple(m), ta = monodromy::trace_triple(after);
    const auto predicted = braid::act_classical(word, tb);
    j["before"] = {{"matrices", monodromy::to_json(m)}, {"traces", triple_json(tb)}};
    j["after"] = {{"matrices", monodromy::to_json(after)}, {"traces", triple_json(ta)}};
    j["predicted_traces"] = triple_json(predicted);
    j["max_rel_diff"] = rel_diff(ta, predicted);
    j["casimir"] = {cjson(braid::central_element(tb)), cjson(braid::central_element(ta))};
    j["g_inf"] = {cjson(monodromy::boundary_traces(m)[3]), cjson(monodromy::boundary_traces(after)[3])};
  } else if (a.mode == "shear") {
    braid::ShearState s;
    try {
      if (!a.y.empty() || !a.g.empty()) {
        if (!a.y.empty()) s.y = three(a.y);
        if (!a.g.empty()) s.g = three(a.g);
      } else {
        s = braid::generic_shear_samples(resolve_seed(a.seed), 1).front();
      }
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    const auto after = braid::braid_shear(s, word);
    const auto tb = braid::evaluate_triple(s), ta = braid::evaluate_triple(after);
    j["before"] = {{"y", cjson(s.y)}, {"g", cjson(s.g)}, {"labels", s.labels}, {"triple", triple_json(tb)}};
    j["after"] = {{"y", cjson(after.y)}, {"g", cjson(after.g)}, {"labels", after.labels}, {"triple", triple_json(ta)}};
    j["max_rel_diff_vs_polynomial_action"] = rel_diff(ta, braid::act_classical(word, tb));
    j["casimir"] = {cjson(braid::central_element(tb)), cjson(braid::central_element(ta))};
    j["g_inf"] = {cjson(braid::g_infinity_value(s)), cjson(braid::g_infinity_value(after))};
  } else {
    throw ConfigError("unknown mode '" + a.mode + "'");
  }
  emit(j, "");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shear-coordinate verification engine for the D4 cubic surface"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Run identity suites and print a JSON report");
  verify_cmd->add_option("--suite", va.cfg.suite, "classical|quantum|braid|monodromy|all")->capture_default_str();
  verify_cmd->add_option("--seed", va.seed, "Master seed (default: $D4SHEAR_SEED or 0)");
  verify_cmd->add_option("--samples", va.cfg.samples, "Samples for numeric checks")->capture_default_str();
  verify_cmd->add_option("--abs-tol", va.cfg.abs_tol, "Absolute tolerance")->capture_default_str();
  verify_cmd->add_option("--rel-tol", va.cfg.rel_tol, "Relative tolerance")->capture_default_str();
  verify_cmd->add_option("--output", va.output, "Output path (default stdout)");
  verify_cmd->add_flag("--timing", va.cfg.timing, "Include elapsed_ms (breaks byte-identical output)");
  verify_cmd->add_flag("--serial", va.serial, "Use the serial reference kernels");

  EvalArgs ea;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate the mu-map at a point");
  eval_cmd->add_option("--y", ea.y, "Y1,Y2,Y3 as complex literals (e.g. 0,0,i*pi)");
  eval_cmd->add_option("--y1", ea.y1, "Y1 alone; accepts the pair form a,b");
  eval_cmd->add_option("--y2", ea.y2, "Y2 alone; accepts the pair form a,b");
  eval_cmd->add_option("--y3", ea.y3, "Y3 alone; accepts the pair form a,b");
  eval_cmd->add_option("--g", ea.g, "G1,G2,G3 (default 0,0,0)");
  eval_cmd->add_option("--orbifold", ea.orbifold, "Orbifold orders k1,k2,k3 (each >= 3)");

  BraidArgs ba;
  auto* braid_cmd = app.add_subcommand("braid", "Apply a braid word");
  braid_cmd->add_option("--word", ba.word, "Word such as 12,23,12i (empty = identity)");
  braid_cmd->add_option("--mode", ba.mode, "abstract|quantum|matrix|shear")->capture_default_str();
  braid_cmd->add_option("--seed", ba.seed, "Seed for matrix/shear inputs");
  braid_cmd->add_option("--y", ba.y, "Shear mode: Y1,Y2,Y3");
  braid_cmd->add_option("--g", ba.g, "Shear mode: G1,G2,G3");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigError;
  }

  try {
    if (*verify_cmd) return run_verify(va);
    if (*eval_cmd) return run_eval(ea);
    if (*braid_cmd) return run_braid(ba);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kConfigError;
}
