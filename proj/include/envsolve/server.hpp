#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "envsolve/api.hpp"

namespace envsolve {

/// Stateless JSON-over-HTTP front end for api::dispatch. Requests are served
/// concurrently by a thread pool; handlers only read the shared config.
class Server {
 public:
  explicit Server(api::ServiceConfig config,
                  std::optional<std::filesystem::path> static_dir = std::nullopt);
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  /// Binds the socket; port 0 picks a free port. Returns the bound port or -1.
  int bind(const std::string& host, int port);

  /// Blocks serving requests until stop() is called. Requires a prior bind().
  bool listen();

  void stop();
  bool running() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace envsolve
