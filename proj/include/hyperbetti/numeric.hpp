#pragma once

#include <string>

namespace hyperbetti {

/// Shortest decimal text that parses back to exactly `value`.
std::string format_number(double value);

/// Round to `digits` significant decimal digits (used for centrality output).
double round_significant(double value, int digits);

/// Round to `places` digits after the decimal point (used for coordinates).
double round_decimals(double value, int places);

}  // namespace hyperbetti
