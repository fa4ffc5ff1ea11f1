#include "hyperbetti/attributes.hpp"

#include <cmath>

#include "hyperbetti/error.hpp"
#include "hyperbetti/numeric.hpp"

namespace hyperbetti {

std::optional<double> as_number(const AttributeValue& value) {
  if (const auto* d = std::get_if<double>(&value)) return *d;
  return std::nullopt;
}

std::string to_text(const AttributeValue& value) {
  struct Visitor {
    std::string operator()(std::nullptr_t) const { return "null"; }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(double d) const { return format_number(d); }
    std::string operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, value);
}

void check_finite(const Entity& entity, const std::string& what) {
  if (!std::isfinite(entity.weight)) {
    throw Error(ErrorCode::NonFiniteWeight, "non-finite weight on " + what);
  }
  for (const auto& [key, value] : entity.attrs) {
    if (auto d = as_number(value); d && !std::isfinite(*d)) {
      throw Error(ErrorCode::NonFiniteWeight,
                  "non-finite value for attribute '" + key + "' on " + what);
    }
  }
}

}  // namespace hyperbetti
