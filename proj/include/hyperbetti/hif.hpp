#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hyperbetti/core.hpp"
#include "hyperbetti/error.hpp"

namespace hyperbetti {

/// Version marker written into every emitted document's metadata.
inline constexpr std::string_view hif_version = "artifact-1";

struct Diagnostic {
  enum class Severity { error, warning };

  Severity severity = Severity::error;
  ErrorCode code = ErrorCode::SchemaViolation;
  std::string path;  // JSON pointer
  std::string message;
};

/// Throws Error with the first error diagnostic validate_hif would report.
Hypergraph parse_hif(std::string_view bytes);

/// Canonical document: fixed key order, entities sorted by id, two-space
/// indentation, default weights and empty attrs omitted, trailing newline.
std::string emit_hif(const Hypergraph& h);

/// Every problem in the document; empty means parse_hif accepts it.
/// Warnings do not make a document invalid.
std::vector<Diagnostic> validate_hif(std::string_view bytes);

bool has_errors(const std::vector<Diagnostic>& diagnostics);

nlohmann::ordered_json to_json(const Diagnostic& d);
nlohmann::json to_json(const Attributes& attrs);
nlohmann::json to_json(const AttributeValue& value);

}  // namespace hyperbetti
