#pragma once

#include <array>

#include "d4shear/surface.hpp"

namespace d4shear::surface {

// Pairing of the EG partials with Goldman brackets, with u = G12, v = G13,
// w = G23. Validated by resolve_eg_pairings (see the eg_dictionary test).
inline constexpr std::array<BracketPairing, 3> kEgPairings{{
    {"{u,v}", 0, 2, +1},  // {G12, G13}
    {"{v,w}", 2, 1, +1},  // {G13, G23}
    {"{w,u}", 1, 0, +1},  // {G23, G12}
}};

}  // namespace d4shear::surface
