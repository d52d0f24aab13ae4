#include <stdexcept>

#include "d4shear/report.hpp"

namespace d4shear::verify {

std::string to_string(Status s) {
  switch (s) {
    case Status::exact_zero: return "exact-zero";
    case Status::within_tol: return "within-tol";
    case Status::failed: return "failed";
  }
  return "failed";
}

Result exact_result(std::string id, std::string paper_ref, std::size_t residual_terms, bool expected_zero) {
  Result r;
  r.id = std::move(id);
  r.paper_ref = std::move(paper_ref);
  r.residual = static_cast<double>(residual_terms);
  const bool zero = residual_terms == 0;
  r.status = zero == expected_zero ? Status::exact_zero : Status::failed;
  return r;
}

Result numeric_result(std::string id, std::string paper_ref, double residual, double tol) {
  Result r;
  r.id = std::move(id);
  r.paper_ref = std::move(paper_ref);
  r.residual = residual;
  r.status = residual <= tol ? Status::within_tol : Status::failed;
  return r;
}

void validate(const SuiteConfig& cfg) {
  if (cfg.suite != "classical" && cfg.suite != "quantum" && cfg.suite != "braid" && cfg.suite != "monodromy" &&
      cfg.suite != "all") {
    throw std::invalid_argument("unknown suite '" + cfg.suite + "'");
  }
  if (!(cfg.abs_tol > 0.0) || !(cfg.rel_tol > 0.0)) throw std::invalid_argument("tolerances must be positive");
  if (cfg.samples < 1) throw std::invalid_argument("samples must be >= 1");
}

bool Report::passed() const {
  for (const auto& r : results) {
    if (!r.diagnostic && r.status == Status::failed) return false;
  }
  return true;
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["schema"] = 1;
  j["suite"] = suite;
  j["seed"] = seed;
  j["samples"] = samples;
  auto arr = nlohmann::json::array();
  for (const auto& r : results) {
    nlohmann::json e{{"id", r.id}, {"paper_ref", r.paper_ref}, {"status", to_string(r.status)}, {"residual", r.residual}};
    if (r.diagnostic) e["diagnostic"] = true;
    if (!r.note.empty()) e["note"] = r.note;
    arr.push_back(std::move(e));
  }
  j["results"] = std::move(arr);
  j["passed"] = passed();
  if (elapsed_ms) j["elapsed_ms"] = *elapsed_ms;
  return j;
}

}  // namespace d4shear::verify
