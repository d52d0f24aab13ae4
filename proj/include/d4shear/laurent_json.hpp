#pragma once

#include <string>

#include <json.hpp>

#include "d4shear/laurent.hpp"

namespace d4shear::exactalg {

/// Array of {"coeff": "num/den", "y": [..], "p": [..], "g": [..]} in
/// canonical term order.
nlohmann::json to_json(const LaurentPoly& f);
/// Throws std::invalid_argument on schema violations.
LaurentPoly laurent_from_json(const nlohmann::json& j);

std::string dump(const LaurentPoly& f);

}  // namespace d4shear::exactalg
