#pragma once

#include <array>
#include <complex>
#include <string_view>
#include <vector>

namespace d4shear::cli {

/// Parses a complex literal: a signed sum of terms, each a product of
/// factors drawn from decimal numbers, `pi` (or the Greek letter) and `i`,
/// optionally joined by `*`. Examples: "1.5-2i", "i*pi", "2pi i", "-0.25".
/// The pair form "a,b" is accepted as a + b i. Throws std::invalid_argument.
std::complex<double> parse_complex(std::string_view text);

/// Splits on commas and parses each piece; requires `count` values.
std::vector<std::complex<double>> parse_complex_list(std::string_view text, std::size_t count);

}  // namespace d4shear::cli
