#include "hyperbetti/server.hpp"

#include <charconv>
#include <map>
#include <mutex>

#include "httplib.h"
#include "hyperbetti/error.hpp"
#include "hyperbetti/hif.hpp"

namespace hyperbetti {

namespace {

constexpr const char* placeholder_page = R"(<!DOCTYPE html>
<html lang="en">
<head><meta charset="utf-8"><title>hyperbetti</title></head>
<body>
<h1>hyperbetti</h1>
<p>The explorer bundle is not installed. Start the server with
<code>--static DIR</code> pointing at a built viewer, or query the API directly:</p>
<ul>
<li><a href="/api/hif">/api/hif</a></li>
<li><a href="/api/layout">/api/layout</a></li>
</ul>
</body>
</html>
)";

std::optional<std::uint64_t> parse_seed(const std::string& text) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

}  // namespace

struct Server::Impl {
  Hypergraph graph;
  ServeOptions options;
  std::string hif;
  httplib::Server http;
  bool bound = false;

  mutable std::mutex cache_mutex;
  mutable std::map<std::uint64_t, std::string> layouts;

  std::string layout(std::uint64_t seed) const {
    {
      std::lock_guard lock(cache_mutex);
      if (auto it = layouts.find(seed); it != layouts.end()) return it->second;
    }
    auto params = options.layout;
    params.seed = seed;
    auto body = to_json(force_layout(graph, params, options.encodings)).dump() + "\n";
    std::lock_guard lock(cache_mutex);
    return layouts.emplace(seed, std::move(body)).first->second;
  }

  void routes() {
    // httplib's default also sets SO_REUSEPORT, which would let a second
    // server share a taken port instead of failing.
    http.set_socket_options([](socket_t sock) {
      int yes = 1;
      setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const char*>(&yes), sizeof yes);
    });
    http.set_post_routing_handler([](const httplib::Request&, httplib::Response& res) {
      res.set_header("Access-Control-Allow-Origin", "*");
      res.set_header("Access-Control-Allow-Methods", "GET, OPTIONS");
      res.set_header("Access-Control-Allow-Headers", "Content-Type");
    });
    http.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) {
      res.status = 204;
    });
    http.Get("/api/hif", [this](const httplib::Request&, httplib::Response& res) {
      res.set_content(hif, "application/json");
    });
    http.Get("/api/layout", [this](const httplib::Request& req, httplib::Response& res) {
      auto seed = options.layout.seed;
      if (req.has_param("seed")) {
        auto parsed = parse_seed(req.get_param_value("seed"));
        if (!parsed) {
          res.status = 400;
          res.set_content(R"({"error":"seed must be an unsigned 64-bit integer"})" "\n",
                          "application/json");
          return;
        }
        seed = *parsed;
      }
      res.set_content(layout(seed), "application/json");
    });
    if (options.static_dir) {
      http.set_mount_point("/", options.static_dir->string());
    } else {
      http.Get("/", [](const httplib::Request&, httplib::Response& res) {
        res.set_content(placeholder_page, "text/html; charset=utf-8");
      });
    }
  }
};

Server::Server(Hypergraph h, ServeOptions options) : impl_(std::make_unique<Impl>()) {
  validate(options.layout);
  impl_->hif = emit_hif(h);
  impl_->graph = std::move(h);
  impl_->options = std::move(options);
  if (impl_->options.static_dir && !std::filesystem::is_directory(*impl_->options.static_dir)) {
    throw Error(ErrorCode::InvalidParams,
                "static directory '" + impl_->options.static_dir->string() + "' does not exist");
  }
  impl_->routes();
}

Server::~Server() { stop(); }

int Server::bind(int port) {
  const auto& host = impl_->options.host;
  int bound_port = port;
  if (port == 0) {
    bound_port = impl_->http.bind_to_any_port(host);
  } else if (!impl_->http.bind_to_port(host, port)) {
    bound_port = -1;
  }
  if (bound_port < 0) {
    throw Error(ErrorCode::PortInUse,
                "cannot listen on " + host + ":" + std::to_string(port) + " (port in use?)");
  }
  impl_->bound = true;
  return bound_port;
}

void Server::listen() {
  if (!impl_->bound) throw Error(ErrorCode::InvalidParams, "listen() before bind()");
  impl_->http.listen_after_bind();
}

void Server::stop() {
  if (impl_ && impl_->http.is_running()) impl_->http.stop();
}

bool Server::running() const { return impl_->http.is_running(); }

std::string Server::hif_body() const { return impl_->hif; }

std::string Server::layout_body(std::uint64_t seed) const { return impl_->layout(seed); }

}  // namespace hyperbetti
