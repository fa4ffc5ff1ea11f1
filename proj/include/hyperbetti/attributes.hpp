#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>

namespace hyperbetti {

/// Scalar metadata value: null, boolean, finite number, or text.
using AttributeValue = std::variant<std::nullptr_t, bool, double, std::string>;

/// Ordered so that iteration (and therefore serialization) is deterministic.
using Attributes = std::map<std::string, AttributeValue, std::less<>>;

inline AttributeValue text_value(std::string s) { return AttributeValue(std::move(s)); }

std::optional<double> as_number(const AttributeValue& value);

/// Display form: numbers in shortest round-trip form, booleans as
/// true/false, null as "null".
std::string to_text(const AttributeValue& value);

/// Weight and attributes attached to a node, an edge, or an incidence.
struct Entity {
  double weight = 1.0;
  Attributes attrs;

  bool is_default() const { return weight == 1.0 && attrs.empty(); }
  friend bool operator==(const Entity&, const Entity&) = default;
};

/// Throws NonFiniteWeight if the weight or any numeric attribute is NaN/inf.
void check_finite(const Entity& entity, const std::string& what);

}  // namespace hyperbetti
