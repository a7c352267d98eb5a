#pragma once

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "clima/fetch.hpp"
#include "clima/params.hpp"
#include "clima/sessions.hpp"
#include "clima/stations.hpp"

namespace httplib {
class Server;
}

namespace clima::service {

struct ServiceConfig {
  std::string bind_address = "0.0.0.0";
  int port = 8080;
  std::filesystem::path cache_dir = "cache";
  std::size_t max_upload_bytes = 20u * 1024u * 1024u;
  std::chrono::seconds session_ttl = std::chrono::hours(24);
  std::size_t session_capacity = 64;
  std::vector<std::filesystem::path> catalogs;
};

/// Reads CLIMA_PORT, CLIMA_CACHE_DIR, CLIMA_MAX_UPLOAD_MB, CLIMA_SESSION_TTL_H,
/// CLIMA_SESSION_CAP, CLIMA_BIND and CLIMA_CATALOGS (colon-separated paths)
/// over the defaults. Throws std::invalid_argument for malformed values.
ServiceConfig config_from_env(ServiceConfig defaults = {});

struct Response {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
  std::map<std::string, std::string> headers;
};

/// HTTP API over the analysis library. Handlers are plain member functions
/// so they can be exercised without a socket; install() binds them to
/// routes under /api.
class Api {
 public:
  /// A null index makes /api/stations answer 503. A null fetch client makes
  /// station sessions answer 502.
  Api(ServiceConfig config, std::shared_ptr<const StationIndex> index, std::shared_ptr<FetchClient> fetch,
      SessionStore::Now now = [] { return Clock::now(); });

  void install(httplib::Server& server);

  Response health() const;
  Response stations(const params::ParamMap& query) const;
  /// Body is raw EPW text, or JSON {"station_id": "..."} when the content
  /// type is application/json.
  Response create_session(std::string_view content_type, std::string_view body);
  Response session_info(const std::string& id);
  Response delete_session(const std::string& id);
  Response frame_csv(const std::string& id);
  Response epw_download(const std::string& id);
  Response columns(const std::string& id);
  Response analysis(const std::string& id, const std::string& kind, const params::ParamMap& query);
  Response chart(const std::string& id, const std::string& kind, const params::ParamMap& query,
                 std::string_view if_none_match = {});
  Response chart_sidecar(const std::string& id, const std::string& kind, const params::ParamMap& query);

  SessionStore& sessions() noexcept { return sessions_; }
  const ServiceConfig& config() const noexcept { return config_; }

 private:
  Response session_created(const Session& s) const;

  ServiceConfig config_;
  std::shared_ptr<const StationIndex> index_;
  std::shared_ptr<FetchClient> fetch_;
  SessionStore sessions_;
};

/// Loads every catalog file of the config into one index.
std::shared_ptr<const StationIndex> load_catalogs(const std::vector<std::filesystem::path>& paths);

}  // namespace clima::service
