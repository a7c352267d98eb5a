// The HTTP API bound to a loopback port, backed by the fixture catalog and
// a FixtureServer standing in for upstream hosts.
#pragma once

#include <httplib.h>

#include <memory>
#include <thread>

#include "clima/api.hpp"
#include "fixture_server.hpp"

namespace clima::testing {

class ServiceHarness {
 public:
  explicit ServiceHarness(service::SessionStore::Now now = [] { return service::Clock::now(); },
                          std::size_t max_upload_mb = 20) {
    service::ServiceConfig config;
    config.cache_dir = cache_.path();
    config.max_upload_bytes = max_upload_mb << 20;
    service::FetchOptions fo;
    fo.cache_dir = cache_.path();
    fo.backoff = std::chrono::milliseconds(10);
    index_ = std::make_shared<const service::StationIndex>(upstream_.catalog());
    fetch_ = std::make_shared<service::FetchClient>(fo);
    api_ = std::make_unique<service::Api>(config, index_, fetch_, std::move(now));
    api_->install(server_);
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~ServiceHarness() {
    server_.stop();
    thread_.join();
  }
  ServiceHarness(const ServiceHarness&) = delete;
  ServiceHarness& operator=(const ServiceHarness&) = delete;

  [[nodiscard]] httplib::Client client() const {
    httplib::Client c("127.0.0.1", port_);
    c.set_read_timeout(std::chrono::seconds(30));
    return c;
  }
  service::Api& api() { return *api_; }
  service::FetchClient& fetch() { return *fetch_; }
  FixtureServer& upstream() { return upstream_; }
  [[nodiscard]] const service::StationIndex& index() const { return *index_; }

  /// Creates a session from raw EPW text over HTTP; returns the session id.
  std::string upload(const std::string& epw_text) {
    auto res = client().Post("/api/sessions", epw_text, "text/plain");
    if (!res || res->status != 201) throw std::runtime_error("upload failed");
    return nlohmann::json::parse(res->body).at("session_id").get<std::string>();
  }

 private:
  FixtureServer upstream_;
  TempDir cache_;
  std::shared_ptr<const service::StationIndex> index_;
  std::shared_ptr<service::FetchClient> fetch_;
  std::unique_ptr<service::Api> api_;
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
};

}  // namespace clima::testing
