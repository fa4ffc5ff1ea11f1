#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "hyperbetti/core.hpp"
#include "hyperbetti/layout.hpp"

namespace hyperbetti {

struct ServeOptions {
  std::string host = "127.0.0.1";
  LayoutParams layout;  // layout.seed is the default for /api/layout
  Encodings encodings;
  /// Directory holding the viewer bundle; a placeholder page is served
  /// at "/" when unset.
  std::optional<std::filesystem::path> static_dir;
};

/// Read-only HTTP backend for the browser explorer.
///
///   GET /api/hif             canonical HIF of the loaded hypergraph
///   GET /api/layout?seed=S   LayoutDocument JSON (400 on a malformed seed)
///   GET /                    viewer bundle or placeholder
///
/// Every response carries permissive CORS headers. Layouts are memoized
/// per seed; handlers may run concurrently.
class Server {
 public:
  Server(Hypergraph h, ServeOptions options);
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  /// Binds the listening socket; port 0 picks a free one. Returns the
  /// bound port. Throws PortInUse.
  int bind(int port);
  /// Serves until stop(); requires a successful bind().
  void listen();
  void stop();
  bool running() const;

  std::string hif_body() const;
  std::string layout_body(std::uint64_t seed) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace hyperbetti
