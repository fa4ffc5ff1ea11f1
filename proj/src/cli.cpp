#include "hyperbetti/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "hyperbetti/csv.hpp"
#include "hyperbetti/error.hpp"
#include "hyperbetti/hif.hpp"
#include "hyperbetti/homology.hpp"
#include "hyperbetti/layout.hpp"
#include "hyperbetti/numeric.hpp"
#include "hyperbetti/server.hpp"
#include "hyperbetti/smetrics.hpp"

namespace hyperbetti::cli {

namespace {

struct Input {
  std::string path = "-";
  std::string format;  // empty: infer
};

struct Metric {
  std::size_t s = 1;
  std::string side = "edges";
};

std::string read_stream(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string resolve_format(const Input& input) {
  if (!input.format.empty()) return input.format;
  if (input.path == "-") return "hif";
  auto ext = std::filesystem::path(input.path).extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".csv" ? "csv" : "hif";
}

std::string read_input(const Input& input, std::istream& in) {
  if (input.path == "-") return read_stream(in);
  std::ifstream file(input.path, std::ios::binary);
  if (!file) throw Error(ErrorCode::MalformedJson, "cannot read '" + input.path + "'");
  return read_stream(file);
}

Hypergraph load(const Input& input, std::istream& in) {
  auto text = read_input(input, in);
  return resolve_format(input) == "csv" ? parse_csv(text) : parse_hif(text);
}

void add_input(CLI::App* sub, Input& input) {
  sub->add_option("input", input.path, "HIF (.json) or CSV file; '-' or omitted reads stdin")
      ->check(CLI::IsMember({"-"}) | CLI::ExistingFile);
  sub->add_option("--format", input.format, "Input format (default: from extension, stdin is hif)")
      ->check(CLI::IsMember({"hif", "csv"}));
}

void add_metric(CLI::App* sub, Metric& metric) {
  sub->add_option("--s", metric.s, "Width parameter s")->check(CLI::PositiveNumber);
  sub->add_option("--side", metric.side, "Line graph over edges or nodes")
      ->check(CLI::IsMember({"edges", "nodes"}));
}

void add_output(CLI::App* sub, std::string& output) {
  sub->add_option("--output", output, "Output format")->check(CLI::IsMember({"json", "text"}));
}

Side side_of(const Metric& m) { return *parse_side(m.side); }

void print_json(std::ostream& out, const nlohmann::ordered_json& j) { out << j.dump() << "\n"; }

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Hypergraph analytics: s-metrics, simplicial homology, HIF, Euler-diagram layout",
               "hyperbetti"};
  app.require_subcommand(1);

  Input input;
  Metric metric;
  std::string output = "json";

  auto* stats_cmd = app.add_subcommand("stats", "Node, edge and incidence counts with histograms");
  add_input(stats_cmd, input);
  add_output(stats_cmd, output);

  auto* toplex_cmd = app.add_subcommand("toplexes", "Maximal edges");
  add_input(toplex_cmd, input);
  add_output(toplex_cmd, output);

  auto* comp_cmd = app.add_subcommand("components", "s-connected components");
  add_input(comp_cmd, input);
  add_metric(comp_cmd, metric);
  add_output(comp_cmd, output);

  std::string from, to;
  auto* dist_cmd = app.add_subcommand("distance", "s-distance between two edges or nodes");
  add_input(dist_cmd, input);
  add_metric(dist_cmd, metric);
  add_output(dist_cmd, output);
  dist_cmd->add_option("--from", from, "Source vertex")->required();
  dist_cmd->add_option("--to", to, "Target vertex")->required();

  std::string kind = "betweenness";
  bool normalized = false;
  auto* cent_cmd = app.add_subcommand("centrality", "s-centrality of every line graph vertex");
  add_input(cent_cmd, input);
  add_metric(cent_cmd, metric);
  add_output(cent_cmd, output);
  cent_cmd->add_option("--kind", kind, "Centrality measure")
      ->check(CLI::IsMember({"betweenness", "closeness", "harmonic", "eccentricity"}));
  cent_cmd->add_flag("--normalized", normalized, "Report normalized values");

  std::size_t kmax = 2;
  auto* hom_cmd = app.add_subcommand("homology", "Betti numbers over GF(2)");
  add_input(hom_cmd, input);
  add_output(hom_cmd, output);
  hom_cmd->add_option("--kmax", kmax, "Top dimension")->check(CLI::Range(std::size_t{0}, max_kmax));

  std::string target;
  auto* conv_cmd = app.add_subcommand("convert", "Convert between HIF and CSV");
  add_input(conv_cmd, input);
  conv_cmd->add_option("--to", target, "Output format")
      ->required()
      ->check(CLI::IsMember({"hif", "csv"}));

  auto* valid_cmd = app.add_subcommand("validate", "List HIF schema diagnostics");
  add_input(valid_cmd, input);

  LayoutParams params;
  Encodings encodings;
  bool svg = false;
  std::string layout_output = "json";
  auto add_layout_flags = [&](CLI::App* sub) {
    sub->add_option("--seed", params.seed, "Seed for initial positions");
    sub->add_option("--iterations", params.iterations, "Spring embedder iterations")
        ->check(CLI::PositiveNumber);
    sub->add_option("--width", params.width, "Canvas width")->check(CLI::PositiveNumber);
    sub->add_option("--height", params.height, "Canvas height")->check(CLI::PositiveNumber);
    sub->add_option("--node-radius", params.node_radius, "Node circle radius")
        ->check(CLI::PositiveNumber);
    sub->add_option("--hull-padding", params.hull_padding, "Hull offset around nodes")
        ->check(CLI::PositiveNumber);
    sub->add_option("--node-size", encodings.node_size, "Numeric node attribute for size");
    sub->add_option("--node-color", encodings.node_color, "Node attribute for color");
    sub->add_option("--edge-color", encodings.edge_color, "Edge attribute for color");
  };
  auto* layout_cmd = app.add_subcommand("layout", "Force-directed Euler diagram layout");
  add_input(layout_cmd, input);
  add_layout_flags(layout_cmd);
  layout_cmd->add_flag("--svg", svg, "Render SVG instead of LayoutDocument JSON");
  layout_cmd->add_option("--output", layout_output, "Output format")
      ->check(CLI::IsMember({"json", "svg"}));

  int port = 8080;
  std::string host = "127.0.0.1";
  std::string static_dir;
  auto* serve_cmd = app.add_subcommand("serve", "Serve the explorer API over HTTP");
  add_input(serve_cmd, input);
  add_layout_flags(serve_cmd);
  serve_cmd->add_option("--port", port, "Listen port")
      ->envname("HYPERBETTI_PORT")
      ->check(CLI::Range(0, 65535));
  serve_cmd->add_option("--host", host, "Listen address");
  serve_cmd->add_option("--static", static_dir, "Directory with the viewer bundle")
      ->check(CLI::ExistingDirectory);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return exit_ok;
    }
    err << "error: " << e.what() << "\n";
    err << "hint: run 'hyperbetti --help' or 'hyperbetti <command> --help'\n";
    return exit_usage;
  }

  const bool text = output == "text";
  try {
    if (valid_cmd->parsed()) {
      auto bytes = read_input(input, in);
      std::vector<Diagnostic> diags;
      if (resolve_format(input) == "csv") {
        try {
          parse_csv(bytes);
        } catch (const Error& e) {
          diags.push_back({Diagnostic::Severity::error, e.code(), "", e.what()});
        }
      } else {
        diags = validate_hif(bytes);
      }
      auto j = nlohmann::ordered_json::array();
      for (const auto& d : diags) j.push_back(to_json(d));
      print_json(out, j);
      return has_errors(diags) ? exit_data : exit_ok;
    }

    const auto h = load(input, in);

    if (stats_cmd->parsed()) {
      auto j = to_json(stats(h));
      if (!text) {
        print_json(out, j);
      } else {
        for (const auto& [key, value] : j.items()) out << key << ": " << value.dump() << "\n";
      }
    } else if (toplex_cmd->parsed()) {
      auto tops = toplexes(h);
      if (!text) {
        print_json(out, nlohmann::ordered_json(tops));
      } else {
        for (const auto& id : tops) out << id << "\n";
      }
    } else if (comp_cmd->parsed()) {
      auto comps = s_connected_components(h, metric.s, side_of(metric));
      if (!text) {
        print_json(out, components_to_json(comps));
      } else {
        for (const auto& c : comps) {
          for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i];
          out << "\n";
        }
      }
    } else if (dist_cmd->parsed()) {
      auto d = s_distance(h, metric.s, side_of(metric), from, to);
      if (!text) {
        nlohmann::ordered_json j;
        j["from"] = from;
        j["to"] = to;
        j["s"] = metric.s;
        j["side"] = metric.side;
        j["distance"] = d ? nlohmann::ordered_json(*d) : nlohmann::ordered_json(nullptr);
        print_json(out, j);
      } else {
        out << (d ? std::to_string(*d) : std::string("unreachable")) << "\n";
      }
    } else if (cent_cmd->parsed()) {
      const auto side = side_of(metric);
      if (kind == "eccentricity") {
        auto ecc = s_eccentricities(h, metric.s, side);
        if (!text) {
          print_json(out, nlohmann::ordered_json(ecc));
        } else {
          for (const auto& [id, value] : ecc) out << id << "\t" << value << "\n";
        }
      } else {
        Centrality values;
        if (kind == "betweenness") values = s_betweenness(h, metric.s, side, normalized);
        if (kind == "closeness") values = s_closeness(h, metric.s, side, normalized);
        if (kind == "harmonic") values = s_harmonic(h, metric.s, side, normalized);
        if (!text) {
          print_json(out, centrality_to_json(values));
        } else {
          for (const auto& [id, value] : values) {
            out << id << "\t" << format_number(round_significant(value, 12)) << "\n";
          }
        }
      }
    } else if (hom_cmd->parsed()) {
      auto profile = betti_numbers(h, kmax);
      if (!text) {
        print_json(out, to_json(profile));
      } else {
        auto join = [](const std::vector<std::size_t>& v) {
          std::string s;
          for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
          return s;
        };
        out << "betti: " << join(profile.betti) << "\n";
        out << "face_counts: " << join(profile.face_counts) << "\n";
        out << "euler: " << profile.euler_characteristic << "\n";
        out << "coefficients: GF(2), non-reduced\n";
      }
    } else if (conv_cmd->parsed()) {
      out << (target == "csv" ? emit_csv(h) : emit_hif(h));
    } else if (layout_cmd->parsed()) {
      auto doc = force_layout(h, params, encodings);
      if (svg || layout_output == "svg") {
        out << render_svg(h, doc);
      } else {
        print_json(out, to_json(doc));
      }
    } else if (serve_cmd->parsed()) {
      ServeOptions options;
      options.host = host;
      options.layout = params;
      options.encodings = encodings;
      if (!static_dir.empty()) options.static_dir = static_dir;
      Server server(h, std::move(options));
      const int bound = server.bind(port);
      err << "serving http://" << host << ":" << bound << "/ (Ctrl-C to stop)\n";
      err.flush();
      server.listen();
    }
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return exit_data;
  }
  return exit_ok;
}

}  // namespace hyperbetti::cli
