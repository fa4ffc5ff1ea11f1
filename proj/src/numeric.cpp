#include "hyperbetti/numeric.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace hyperbetti {

std::string format_number(double value) {
  if (value == 0.0) return "0";  // folds -0
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), end);
}

double round_significant(double value, int digits) {
  if (value == 0.0 || !std::isfinite(value)) return value;
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.*g", digits, value);
  return std::strtod(buf.data(), nullptr);
}

double round_decimals(double value, int places) {
  if (!std::isfinite(value)) return value;
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.*f", places, value);
  double rounded = std::strtod(buf.data(), nullptr);
  return rounded == 0.0 ? 0.0 : rounded;
}

}  // namespace hyperbetti
