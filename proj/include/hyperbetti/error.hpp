#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperbetti {

enum class ErrorCode {
  EmptyIdentifier,
  NonFiniteWeight,
  UnknownNode,
  UnknownEdge,
  InvalidS,
  UnknownVertex,
  DimensionOutOfRange,
  EdgeTooLarge,
  MalformedJson,
  MalformedCsv,
  SchemaViolation,
  DuplicateIncidence,
  InvalidParams,
  MissingPosition,
  InconsistentDocument,
  PortInUse,
};

std::string_view to_string(ErrorCode code);

/// Data error raised by every module. `path()` is a JSON pointer for
/// errors located inside a HIF document, empty otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string path = {})
      : std::runtime_error(message), code_(code), path_(std::move(path)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& path() const noexcept { return path_; }

 private:
  ErrorCode code_;
  std::string path_;
};

}  // namespace hyperbetti
