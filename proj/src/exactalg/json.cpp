#include "d4shear/laurent_json.hpp"

#include <stdexcept>

namespace d4shear::exactalg {

namespace {

std::array<int, 3> int_triple(const nlohmann::json& j, const char* field) {
  if (!j.contains(field)) throw std::invalid_argument(std::string("missing field ") + field);
  const auto& a = j.at(field);
  if (!a.is_array() || a.size() != 3) throw std::invalid_argument(std::string(field) + " must be 3 ints");
  std::array<int, 3> r{};
  for (int i = 0; i < 3; ++i) {
    if (!a[i].is_number_integer()) throw std::invalid_argument(std::string(field) + " must be 3 ints");
    r[i] = a[i].get<int>();
  }
  return r;
}

}  // namespace

nlohmann::json to_json(const LaurentPoly& f) {
  auto out = nlohmann::json::array();
  for (const auto& [k, c] : f.terms()) {
    out.push_back({{"coeff", c.str()}, {"y", k.y}, {"p", k.p}, {"g", k.g}});
  }
  return out;
}

LaurentPoly laurent_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("LaurentPoly JSON must be an array of terms");
  LaurentPoly f;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("coeff") || !term.at("coeff").is_string()) {
      throw std::invalid_argument("term needs a string coeff");
    }
    const auto coeff = BigRational::parse(term.at("coeff").get<std::string>());
    f.add_term(ExponentVector(int_triple(term, "y"), int_triple(term, "p"), int_triple(term, "g")), coeff);
  }
  return f;
}

std::string dump(const LaurentPoly& f) { return to_json(f).dump(); }

}  // namespace d4shear::exactalg
