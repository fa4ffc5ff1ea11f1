#include "hyperbetti/csv.hpp"

#include <algorithm>
#include <charconv>
#include <vector>

#include "hyperbetti/error.hpp"
#include "hyperbetti/numeric.hpp"

namespace hyperbetti {

namespace {

struct Row {
  std::size_t line = 0;
  std::vector<std::string> fields;
};

std::vector<Row> split_records(std::string_view text) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

  std::vector<Row> rows;
  Row current{1, {}};
  std::string field;
  bool quoted = false;
  bool field_started = false;
  std::size_t line = 1;

  auto end_record = [&] {
    if (field_started || !current.fields.empty()) {
      current.fields.push_back(std::move(field));
      rows.push_back(std::move(current));
    }
    field.clear();
    field_started = false;
    current = Row{line, {}};
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        quoted = true;
        field_started = true;
        break;
      case ',':
        current.fields.push_back(std::move(field));
        field.clear();
        field_started = true;
        break;
      case '\r':
        break;
      case '\n':
        ++line;
        end_record();
        break;
      default:
        field.push_back(c);
        field_started = true;
    }
  }
  if (quoted) {
    throw Error(ErrorCode::MalformedCsv, "unterminated quoted field at line " +
                                             std::to_string(current.line));
  }
  end_record();
  return rows;
}

std::string trim(std::string_view s) {
  auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

std::string quote_if_needed(const std::string& field) {
  bool needs = field.find_first_of(",\"\r\n") != std::string::npos ||
               field.front() == ' ' || field.back() == ' ';
  if (!needs) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

Hypergraph parse_csv(std::string_view text) {
  auto rows = split_records(text);
  if (rows.empty()) throw Error(ErrorCode::MalformedCsv, "missing header row edge,node[,weight]");

  std::vector<std::string> header;
  for (const auto& f : rows.front().fields) header.push_back(trim(f));
  bool has_weight = header.size() == 3 && header[2] == "weight";
  if (header.size() < 2 || header[0] != "edge" || header[1] != "node" ||
      (header.size() == 3 && !has_weight) || header.size() > 3) {
    throw Error(ErrorCode::MalformedCsv, "header must be edge,node[,weight]");
  }

  std::vector<IncidenceInput> incidences;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    const auto where = " at line " + std::to_string(row.line);
    if (row.fields.size() == 1 && trim(row.fields[0]).empty()) continue;
    if (row.fields.size() < 2 || row.fields.size() > header.size()) {
      throw Error(ErrorCode::MalformedCsv, "expected " + std::to_string(header.size()) +
                                               " fields" + where);
    }
    IncidenceInput inc{row.fields[0], row.fields[1], std::nullopt, {}};
    if (has_weight && row.fields.size() == 3) {
      auto w = trim(row.fields[2]);
      if (!w.empty()) {
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), value);
        if (ec != std::errc{} || ptr != w.data() + w.size()) {
          throw Error(ErrorCode::MalformedCsv, "invalid weight '" + w + "'" + where);
        }
        inc.weight = value;
      }
    }
    incidences.push_back(std::move(inc));
  }
  return Hypergraph::build(std::move(incidences));
}

std::string emit_csv(const Hypergraph& h) {
  const auto& incs = h.incidences();
  bool weighted = std::any_of(incs.begin(), incs.end(),
                              [](const Incidence& i) { return i.props.weight != 1.0; });
  std::string out = weighted ? "edge,node,weight\n" : "edge,node\n";
  for (const auto& inc : incs) {
    out += quote_if_needed(inc.edge);
    out += ',';
    out += quote_if_needed(inc.node);
    if (weighted) {
      out += ',';
      out += format_number(inc.props.weight);
    }
    out += '\n';
  }
  return out;
}

}  // namespace hyperbetti
