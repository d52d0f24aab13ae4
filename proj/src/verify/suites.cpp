#include <chrono>
#include <sstream>

#include "d4shear/braid.hpp"
#include "d4shear/monodromy.hpp"
#include "d4shear/report.hpp"
#include "d4shear/surface.hpp"

namespace d4shear::verify {

namespace {

using surface::QOrientation;

std::string powers_str(const surface::CasimirPowers& p) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < 7; ++i) os << (i ? "," : "") << p[i];
  os << ")";
  return os.str();
}

Result sweep_result(std::string id, std::string ref, const SweepResult& s, double tol) {
  Result r = numeric_result(std::move(id), std::move(ref), s.max_residual, tol);
  r.note = std::to_string(s.samples) + " samples, worst index " + std::to_string(s.worst_index);
  return r;
}

Result diagnostic(Result r, std::string note) {
  r.diagnostic = true;
  r.note = std::move(note);
  return r;
}

const char* goldman_ref(const std::string& id) {
  if (id == "goldman.g12_g23") return "{G12,G23} = G12 G23 - 2 G13 - w13";
  if (id == "goldman.g23_g13") return "{G23,G13} = G23 G13 - 2 G12 - w12";
  return "{G13,G12} = G12 G13 - 2 G23 - w23";
}

}  // namespace

std::vector<Result> classical_suite(const SuiteConfig& cfg) {
  std::vector<Result> out;
  for (const auto& id : surface::goldman_identities()) {
    out.push_back(exact_result(id.name, goldman_ref(id.name), id.residual.size()));
  }
  for (const auto& id : surface::casimir_identities()) {
    out.push_back(exact_result(id.name, "{C, G_ij} = 0, C = sum G_ij^2 - G12 G23 G13 + sum G_ij w_ij",
                               id.residual.size()));
  }
  const auto fr = surface::fricke_check();
  out.push_back(exact_result("fricke", "C = 4 - G1 G2 G3 G_inf - G1^2 - G2^2 - G3^2 - G_inf^2", fr.residual.size()));
  const auto fr0 = surface::fricke_check(surface::HoleParams::orbifold({4, 4, 4}));
  out.push_back(exact_result("fricke.g_zero", "C = 4 - G_inf^2 at G_i = 0", fr0.residual.size()));

  // Degenerate leaves Y1+Y2+Y3 = i n pi with G_i = 0: C is the constant 0.
  for (long n : {0L, 1L, 2L, 3L}) {
    const auto c = surface::casimir_on_leaf(n);
    out.push_back(exact_result("leaf.casimir_n" + std::to_string(n), "C = 4 - G_inf^2 = 0 on Y1+Y2+Y3 = i n pi",
                               c.size()));
  }
  {
    // The claim "C = 4 for n even" is checked as stated; it does not hold.
    const auto c = surface::casimir_on_leaf(0);
    const std::size_t terms = (c - exactalg::LaurentPoly(4L)).size();
    out.push_back(diagnostic(exact_result("leaf.claim_even_is_4", "C = 4 on Y1+Y2+Y3 = 2 i k pi", terms),
                             "C is 0 on every leaf i n pi; C = 4 on i pi/2 + i pi Z"));
  }

  out.push_back(sweep_result("mu.cubic_membership", "phi~(mu(Y)) = 0",
                             sweep_cubic_membership(cfg.seed, std::min<std::size_t>(cfg.samples, 100), cfg.execution),
                             cfg.rel_tol));
  out.push_back(sweep_result("eg.goldman_agreement", "{u,v} = d phi~/dw and cyclic",
                             sweep_eg_agreement(cfg.seed, std::min<std::size_t>(cfg.samples, 100), cfg.execution),
                             cfg.rel_tol));
  return out;
}

std::vector<Result> quantum_suite(const SuiteConfig&) {
  std::vector<Result> out;
  const auto qt = surface::quantum_geodesic_functions();
  const auto qw = surface::quantum_omegas();
  const char* qref = "q^{-1/2} A B - q^{1/2} B A = (q^{-1} - q) C + (q^{-1/2} - q^{1/2}) w";

  const auto rel = surface::quantum_relations_check(qt, qw, QOrientation::reconciled);
  for (const auto& r : rel.relations) out.push_back(exact_result(r.name, qref, r.residual.size()));
  for (const auto& r : rel.hermiticity) out.push_back(exact_result(r.name, "dagger(G_ij) = G_ij", r.residual.size()));
  for (const auto& r : rel.classical_limits) {
    out.push_back(exact_result(r.name, "q -> 1 image of the q-commutation relation is 0 = 0", r.residual.size()));
  }
  const auto lit = surface::quantum_relations_check(qt, qw, QOrientation::literal);
  for (const auto& r : lit.relations) {
    out.push_back(diagnostic(exact_result(r.name + ".literal_q", qref, r.residual.size()),
                             "relations read with the torus q; they hold with q -> 1/q"));
  }

  const auto cas = surface::quantum_casimir_check(qt, qw, QOrientation::reconciled);
  const char* cref = "C^hbar = q^{-1/2} G12 G23 G13 - q^{-1} G12^2 - q G23^2 - q^{-1} G13^2 - ...";
  for (const auto& c : cas.commutators) out.push_back(exact_result(c.name, cref, c.residual.size()));
  out.push_back(exact_result("casimir_q.dagger", "dagger(C^hbar) = C^hbar", cas.hermitian ? 0 : 1));
  {
    Result r = exact_result("casimir_q.classical_limit", "C^hbar at q = 1 equals -C", cas.classical_residual.size());
    if (cas.fitted) r.note = "fitted powers used";
    out.push_back(r);
  }
  const auto cas_lit = surface::quantum_casimir_check(qt, qw, QOrientation::literal);
  {
    std::string note = cas_lit.fitted ? "printed powers not central; fitted:" : "printed powers central";
    for (const auto& p : cas_lit.fitted_powers) note += " " + powers_str(p);
    out.push_back(diagnostic(exact_result("casimir_q.literal_q_fit", cref, cas_lit.central ? 0 : 1), note));
  }

  const auto t = braid::quantum_triple();
  for (auto g : {braid::Generator::b12, braid::Generator::b23, braid::Generator::b12_inv, braid::Generator::b23_inv}) {
    out.push_back(exact_result("braid_q.forms." + braid::to_string(g), "two printed forms of the quantum braid image",
                               braid::quantum_form_residual(g, t).size()));
  }
  out.push_back(diagnostic(exact_result("braid_q.forms.23.printed_omega", "b23 first line with q^{-1/2} w13",
                                        braid::printed_b23_form_residual(t).size()),
                           "forms agree only with q^{1/2} w13"));
  for (auto g : {braid::Generator::b12, braid::Generator::b23, braid::Generator::b12_inv, braid::Generator::b23_inv}) {
    const auto back = braid::act_quantum(braid::inverse(g), braid::act_quantum(g, t));
    out.push_back(exact_result("braid_q.inverse." + braid::to_string(g), "b^{-1} b = Id on the quantum torus",
                               back == t ? 0 : 1));
    const auto lim = braid::classical_limit(braid::act_quantum(g, t));
    const auto cls = braid::act_classical(g, braid::classical_limit(t));
    out.push_back(exact_result("braid_q.classical_limit." + braid::to_string(g), "q -> 1 of the quantum braid image",
                               lim == cls ? 0 : 1));
  }
  const auto hex = braid::act_quantum(braid::BraidWord::parse("12,23,12,23,12,23"), t);
  out.push_back(exact_result("braid_q.relation", "(b12 b23)^3 = Id", hex == t ? 0 : 1));
  return out;
}

std::vector<Result> braid_suite(const SuiteConfig& cfg) {
  std::vector<Result> out;
  for (const auto& id : braid::braid_relation_check()) {
    Result r = exact_result(id.name, id.name == "braid.relation" ? "(b12 b23)^3 = Id" : "C(b t) = C(t), b^{-1} b = Id",
                            id.holds ? 0 : 1);
    if (id.name == "braid.square_is_not_identity") r.paper_ref = "b12^2 != Id";
    out.push_back(r);
  }
  out.push_back(sweep_result("braid.matrix_traces", "b12(M) = (M1 M2 M1^{-1}, M1, M3) induces the trace action",
                             sweep_matrix_braid(cfg.seed, cfg.samples, cfg.execution), cfg.rel_tol));
  const std::size_t shear_n = std::min<std::size_t>(cfg.samples, 100);
  out.push_back(sweep_result("shear.displayed_flip_invariants", "flip preserves G_inf and C",
                             sweep_displayed_flip_invariants(cfg.seed, shear_n, cfg.execution), cfg.rel_tol));
  out.push_back(sweep_result("shear.braid_realisation", "braid_shear induces the polynomial action",
                             sweep_braid_shear(cfg.seed, shear_n, cfg.execution), cfg.rel_tol));

  const auto samples = braid::generic_shear_samples(cfg.seed, 40);
  const auto rep = braid::realization_search(samples, cfg.rel_tol, 3);
  Result r;
  r.id = "shear.realization_search";
  r.paper_ref = "flip formulas vs braid words of length <= 3";
  r.status = rep.holdout_invariant ? Status::within_tol : Status::failed;
  r.residual = static_cast<double>(rep.matches.size());
  r.note = rep.summary;
  out.push_back(r);
  double displayed_best = INFINITY;
  for (const auto& [w, res] : rep.displayed_residuals) displayed_best = std::min(displayed_best, res);
  out.push_back(diagnostic(numeric_result("shear.displayed_flip_as_braid", "displayed flip vs id and generators",
                                          displayed_best, cfg.rel_tol),
                           rep.displayed_matches ? "displayed flip matches a word" : "displayed flip matches no word"));
  return out;
}

std::vector<Result> monodromy_suite(const SuiteConfig& cfg) {
  using monodromy::PunctureType;
  std::vector<Result> out;
  const monodromy::PunctureTypes mixed{PunctureType::hyperbolic, PunctureType::orbifold, PunctureType::hyperbolic};
  const std::pair<const char*, monodromy::PunctureTypes> kinds[3] = {
      {"hyperbolic", monodromy::kAllHyperbolic}, {"orbifold", monodromy::kAllOrbifold}, {"mixed", mixed}};
  for (const auto& [label, types] : kinds) {
    const std::string suffix = std::string(".") + label;
    for (const auto& c : monodromy::generator_checks(types)) {
      out.push_back(exact_result(c.name + suffix, "R^3 = -Id, L = -R^2, block form, det = 1", c.residual.size()));
    }
    for (const auto& c : monodromy::trace_geodesic_check(types)) {
      out.push_back(exact_result(c.name + suffix, "G_ij = -Tr(g_i g_j), G_inf = -Tr(g1 g2 g3), G_i = -Tr g_i",
                                 c.residual.size()));
    }
    for (const auto& c : monodromy::symbolic_skein_checks(types)) {
      out.push_back(exact_result(c.name + suffix, "Tr(AB) + Tr(AB^{-1}) = Tr A Tr B", c.residual.size()));
    }
  }
  for (const auto& v : monodromy::tilde_g13_checks()) {
    const std::size_t terms = v.product_residual.size() + v.bracket_residual.size();
    Result r = exact_result("tilde_g13." + v.name, "G12 G = G~13 + G13 + w13, {G12, G} = G~13 - G13", terms);
    const bool consistent = v.pair_with_g23 && v.sign < 0;
    if (!consistent) r = diagnostic(r, "index or sign variant");
    out.push_back(r);
  }
  out.push_back(sweep_result("ks.goldman", "KS contraction = Goldman right-hand sides",
                             sweep_ks_bracket(cfg.seed, cfg.samples, cfg.execution), cfg.rel_tol));
  out.push_back(sweep_result("ks.antisymmetry", "{G12,G23} = -{G23,G12}",
                             sweep_ks_antisymmetry(cfg.seed, cfg.samples, cfg.execution), cfg.rel_tol));
  out.push_back(sweep_result("skein.numeric", "Tr(AB) + Tr(AB^{-1}) = Tr A Tr B",
                             sweep_skein(cfg.seed, 5 * cfg.samples, cfg.execution), cfg.abs_tol));
  out.push_back(sweep_result("braid.m_inf_trace", "Tr M_inf invariant under conjugation",
                             sweep_m_inf_trace(cfg.seed, cfg.samples, cfg.execution), cfg.rel_tol));
  out.push_back(sweep_result("sample.constrained_traces", "Tr M_j = 2 cos(pi theta_j)",
                             sweep_constrained_traces(cfg.seed, cfg.samples, cfg.execution), cfg.abs_tol));
  return out;
}

Report run_suites(const SuiteConfig& cfg) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  Report report;
  report.suite = cfg.suite;
  report.seed = cfg.seed;
  report.samples = cfg.samples;
  auto append = [&](std::vector<Result> r) { report.results.insert(report.results.end(), r.begin(), r.end()); };
  const bool all = cfg.suite == "all";
  if (all || cfg.suite == "classical") append(classical_suite(cfg));
  if (all || cfg.suite == "quantum") append(quantum_suite(cfg));
  if (all || cfg.suite == "braid") append(braid_suite(cfg));
  if (all || cfg.suite == "monodromy") append(monodromy_suite(cfg));
  if (cfg.timing) {
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return report;
}

}  // namespace d4shear::verify
