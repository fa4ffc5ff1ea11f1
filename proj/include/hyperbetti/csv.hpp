#pragma once

#include <string>
#include <string_view>

#include "hyperbetti/core.hpp"

namespace hyperbetti {

/// Reads `edge,node[,weight]` rows (header required, RFC 4180 quoting).
/// A missing or blank weight means 1.0.
Hypergraph parse_csv(std::string_view text);

/// One row per incidence in (edge, node) order. The weight column is
/// written only when some incidence has a weight other than 1.0.
std::string emit_csv(const Hypergraph& h);

}  // namespace hyperbetti
