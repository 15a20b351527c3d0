#include "envsolve/server.hpp"

#include <httplib.h>

namespace envsolve {

struct Server::Impl {
  api::ServiceConfig config;
  httplib::Server http;
};

namespace {

void reply(httplib::Response& res, const api::Reply& r) {
  res.status = r.status;
  res.set_content(r.body, "application/json");
}

}  // namespace

Server::Server(api::ServiceConfig config, std::optional<std::filesystem::path> static_dir)
    : impl_(std::make_unique<Impl>()) {
  impl_->config = config;
  auto& http = impl_->http;

  http.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                            {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                            {"Access-Control-Allow-Headers", "Content-Type"}});

  http.Get("/api/health", [](const httplib::Request&, httplib::Response& res) {
    reply(res, api::health());
  });

  http.Post(R"(/api/([a-z]+))", [this](const httplib::Request& req, httplib::Response& res) {
    reply(res, api::dispatch(req.matches[1].str(), req.body, impl_->config));
  });

  http.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
  });

  if (static_dir) http.set_mount_point("/", static_dir->string());
}

Server::~Server() { stop(); }

int Server::bind(const std::string& host, int port) {
  if (port == 0) return impl_->http.bind_to_any_port(host);
  return impl_->http.bind_to_port(host, port) ? port : -1;
}

bool Server::listen() { return impl_->http.listen_after_bind(); }

void Server::stop() { impl_->http.stop(); }

bool Server::running() const { return impl_->http.is_running(); }

}  // namespace envsolve
