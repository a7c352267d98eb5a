#include "clima/api.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <httplib.h>

#include "clima/analytics.hpp"
#include "clima/error.hpp"
#include "clima/json_codec.hpp"
#include "clima/numfmt.hpp"
#include "clima/render.hpp"
#include "clima/version.hpp"

namespace clima::service {

using codec::Json;

namespace {

Response json_response(int status, const Json& body) {
  Response r;
  r.status = status;
  r.body = body.dump();
  return r;
}

Response error(int status, std::string_view code, std::string_view message) {
  return json_response(status, codec::error_body(code, message));
}

Response session_not_found(const std::string& id) {
  return error(404, "SessionNotFound", "no live session '" + id + "'");
}

long long unix_seconds(Clock::time_point t) {
  return std::chrono::duration_cast<std::chrono::seconds>(t.time_since_epoch()).count();
}

int status_for(epw::ErrorKind kind) { return kind == epw::ErrorKind::TooLarge ? 413 : 400; }

// Maps library exceptions raised while answering a request.
template <typename F>
Response guarded(F&& f) {
  try {
    return f();
  } catch (const UnknownColumn& e) {
    return error(400, "UnknownColumn", e.what());
  } catch (const BadRequest& e) {
    return error(400, e.code(), e.what());
  } catch (const DomainError& e) {
    return error(400, "DomainError", e.what());
  }
}

std::string env_or(const char* name, const std::string& fallback) {
  const char* v = std::getenv(name);
  return v && *v ? std::string(v) : fallback;
}

long long env_int(const char* name, long long fallback, long long lo, long long hi) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  const auto parsed = parse_int(v);
  if (!parsed || *parsed < lo || *parsed > hi) {
    throw std::invalid_argument(std::string(name) + " must be an integer in [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "]");
  }
  return *parsed;
}

params::ParamMap to_params(const httplib::Request& req) {
  params::ParamMap out;
  for (const auto& [k, v] : req.params) {
    if (!out.emplace(k, v).second) throw BadRequest("BadParameter", "parameter '" + k + "' given more than once");
  }
  return out;
}

void send(httplib::Response& res, const Response& r) {
  res.status = r.status;
  for (const auto& [k, v] : r.headers) res.set_header(k, v);
  if (r.status != 204 && r.status != 304) res.set_content(r.body, r.content_type);
}

}  // namespace

ServiceConfig config_from_env(ServiceConfig c) {
  c.bind_address = env_or("CLIMA_BIND", c.bind_address);
  c.port = static_cast<int>(env_int("CLIMA_PORT", c.port, 0, 65535));
  c.cache_dir = env_or("CLIMA_CACHE_DIR", c.cache_dir.string());
  c.max_upload_bytes =
      static_cast<std::size_t>(env_int("CLIMA_MAX_UPLOAD_MB", static_cast<long long>(c.max_upload_bytes >> 20), 1, 1024))
      << 20;
  c.session_ttl = std::chrono::hours(
      env_int("CLIMA_SESSION_TTL_H", std::chrono::duration_cast<std::chrono::hours>(c.session_ttl).count(), 1, 8760));
  c.session_capacity =
      static_cast<std::size_t>(env_int("CLIMA_SESSION_CAP", static_cast<long long>(c.session_capacity), 1, 100000));
  if (const char* v = std::getenv("CLIMA_CATALOGS"); v && *v) {
    c.catalogs.clear();
    std::string_view rest(v);
    while (!rest.empty()) {
      const auto colon = rest.find(':');
      const auto part = rest.substr(0, colon);
      if (!part.empty()) c.catalogs.emplace_back(std::string(part));
      if (colon == std::string_view::npos) break;
      rest.remove_prefix(colon + 1);
    }
  }
  return c;
}

std::shared_ptr<const StationIndex> load_catalogs(const std::vector<std::filesystem::path>& paths) {
  auto index = std::make_shared<StationIndex>();
  for (const auto& p : paths) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read station catalog " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    index->merge(StationIndex::from_csv(ss.str()));
  }
  return index;
}

Api::Api(ServiceConfig config, std::shared_ptr<const StationIndex> index, std::shared_ptr<FetchClient> fetch,
         SessionStore::Now now)
    : config_(std::move(config)),
      index_(std::move(index)),
      fetch_(std::move(fetch)),
      sessions_(SessionOptions{config_.session_ttl, config_.session_capacity}, std::move(now)) {}

Response Api::health() const {
  return json_response(200, {{"status", "ok"},
                             {"version", version()},
                             {"sessions", sessions_.size()},
                             {"stations", index_ ? Json(index_->size()) : Json(nullptr)}});
}

Response Api::stations(const params::ParamMap& query) const {
  if (!index_) return error(503, "IndexUnavailable", "station index not built");
  return guarded([&] {
    params::require_known(query, {"bbox", "q", "offset", "limit"});
    StationQuery q;
    if (auto b = params::text(query, "bbox")) q.bbox = parse_bbox(*b);
    q.text = params::text(query, "q").value_or("");
    const auto offset = params::integer(query, "offset").value_or(0);
    const auto limit = params::integer(query, "limit").value_or(100);
    if (offset < 0 || limit < 1 || limit > 5000) throw BadRequest("BadParameter", "offset >= 0, 1 <= limit <= 5000");
    q.offset = static_cast<std::size_t>(offset);
    q.limit = static_cast<std::size_t>(limit);
    const auto page = index_->query(q);
    Json items = Json::array();
    for (const auto* s : page.items) {
      items.push_back({{"station_id", s->id},
                       {"name", s->name},
                       {"country", s->country},
                       {"latitude", s->latitude},
                       {"longitude", s->longitude},
                       {"source_url", s->url},
                       {"data_source", to_string(s->source)}});
    }
    return json_response(200, {{"total", page.total}, {"offset", q.offset}, {"limit", q.limit}, {"stations", items}});
  });
}

Response Api::session_created(const Session& s) const {
  const auto summary = analytics::climate_summary(*s.frame);
  auto r = json_response(201, {{"session_id", s.id},
                               {"source", s.source},
                               {"record_count", s.file->records.size()},
                               {"created_at", unix_seconds(s.created_at)},
                               {"expires_at", unix_seconds(s.expires_at)},
                               {"location", codec::encode(s.file->location)},
                               {"summary", codec::encode(summary)}});
  r.headers["Location"] = "/api/sessions/" + s.id;
  return r;
}

Response Api::create_session(std::string_view content_type, std::string_view body) {
  if (body.size() > config_.max_upload_bytes) {
    return error(413, "TooLarge", "upload exceeds " + std::to_string(config_.max_upload_bytes >> 20) + " MB");
  }
  epw::EpwFile file;
  std::string source = "upload";
  if (content_type.starts_with("application/json")) {
    Json req;
    try {
      req = Json::parse(body);
    } catch (const Json::exception&) {
      return error(400, "BadJson", "request body is not valid JSON");
    }
    if (!req.is_object() || !req.contains("station_id") || !req["station_id"].is_string()) {
      return error(400, "BadParameter", "expected {\"station_id\": \"...\"}");
    }
    const auto id = req["station_id"].get<std::string>();
    if (!index_) return error(503, "IndexUnavailable", "station index not built");
    const auto* station = index_->find(id);
    if (!station) return error(404, "UnknownStation", "no station '" + id + "' in the index");
    if (!fetch_) return error(502, "UpstreamUnavailable", "remote fetching is disabled");
    try {
      file = fetch_->fetch_station_file(*station);
    } catch (const FetchError& e) {
      return error(502, e.code(), e.what());
    }
    source = "station:" + id;
  } else {
    try {
      file = epw::parse_epw(body, epw::ParseOptions{config_.max_upload_bytes});
    } catch (const epw::ParseError& e) {
      auto body_json = codec::error_body(epw::to_string(e.kind()), e.what());
      body_json["error"]["line"] = e.line();
      body_json["report"] = codec::encode(epw::validate_structure(body, epw::ParseOptions{config_.max_upload_bytes}));
      return json_response(status_for(e.kind()), body_json);
    }
  }
  return guarded([&] {
    auto frame = analytics::build_frame(file);
    const auto s = sessions_.create(std::move(file), std::move(frame), source);
    return session_created(*s);
  });
}

Response Api::session_info(const std::string& id) {
  const auto s = sessions_.get(id);
  if (!s) return session_not_found(id);
  auto r = session_created(*s);
  r.status = 200;
  r.headers.clear();
  return r;
}

Response Api::delete_session(const std::string& id) {
  if (!sessions_.remove(id)) return session_not_found(id);
  Response r;
  r.status = 204;
  return r;
}

Response Api::frame_csv(const std::string& id) {
  const auto s = sessions_.get(id);
  if (!s) return session_not_found(id);
  Response r;
  r.content_type = "text/csv; charset=utf-8";
  r.body = analytics::export_frame_csv(*s->frame);
  r.headers["Content-Disposition"] = "attachment; filename=\"clima_frame.csv\"";
  return r;
}

Response Api::epw_download(const std::string& id) {
  const auto s = sessions_.get(id);
  if (!s) return session_not_found(id);
  Response r;
  r.content_type = "text/plain; charset=utf-8";
  r.body = epw::serialize_epw(*s->file);
  r.headers["Content-Disposition"] = "attachment; filename=\"weather.epw\"";
  return r;
}

Response Api::columns(const std::string& id) {
  const auto s = sessions_.get(id);
  if (!s) return session_not_found(id);
  return json_response(200, codec::encode_columns(*s->frame));
}

Response Api::analysis(const std::string& id, const std::string& kind, const params::ParamMap& q) {
  const auto s = sessions_.get(id);
  if (!s) return session_not_found(id);
  const auto& frame = *s->frame;
  return guarded([&]() -> Response {
    using params::kFilterKeys;
    if (kind == "summary") {
      params::require_known(q, {});
      return json_response(200, codec::encode(analytics::climate_summary(frame)));
    }
    if (kind == "degree_days") {
      params::require_known(q, {"base_heating", "base_cooling"});
      return json_response(200, codec::encode(analytics::degree_days(
                                    frame, params::number(q, "base_heating").value_or(analytics::kDefaultHeatingBase),
                                    params::number(q, "base_cooling").value_or(analytics::kDefaultCoolingBase))));
    }
    if (kind == "natural_ventilation") {
      params::require_known(q, {"t_min", "t_max", "radiant_t"}, kFilterKeys);
      analytics::NatVentRequest req;
      req.t_min = params::number(q, "t_min").value_or(req.t_min);
      req.t_max = params::number(q, "t_max").value_or(req.t_max);
      req.radiant_surface_t = params::number(q, "radiant_t");
      req.filter = params::parse_filter(q);
      return json_response(200, codec::encode(analytics::natural_ventilation(frame, req)));
    }
    if (kind == "wind_rose") {
      params::require_known(q, {}, kFilterKeys);
      return json_response(200, codec::encode(analytics::wind_rose(frame, params::parse_filter(q))));
    }
    if (kind == "monthly_statistics") {
      params::require_known(q, {"column"});
      const auto column = params::text(q, "column");
      if (!column) throw BadRequest("BadParameter", "monthly_statistics needs a column");
      return json_response(200, codec::encode(analytics::monthly_statistics(frame, *column)));
    }
    if (kind == "explorer") {
      params::require_known(q, {"x", "y", "color", "bins"}, kFilterKeys);
      const auto x = params::text(q, "x").value_or("t_db");
      const auto y = params::text(q, "y").value_or("rh");
      const auto color = params::text(q, "color").value_or(x);
      const auto bins = params::integer(q, "bins").value_or(analytics::kDefaultExplorerBins);
      if (bins < 1 || bins > 500) throw BadRequest("BadParameter", "bins must lie in 1..500");
      return json_response(200, codec::encode(analytics::explorer_triple(frame, x, y, color, params::parse_filter(q),
                                                                         static_cast<std::size_t>(bins))));
    }
    if (kind == "utci") {
      params::require_known(q, {"scenario"}, kFilterKeys);
      return json_response(200, codec::encode(analytics::utci_distribution(
                                    frame, params::text(q, "scenario").value_or("sun_wind"), params::parse_filter(q))));
    }
    if (kind == "psychrometric") {
      params::require_known(q, {"color_by"}, kFilterKeys);
      return json_response(200,
                           codec::encode(analytics::psychro_bins(frame, params::text(q, "color_by"), params::parse_filter(q))));
    }
    return error(404, "UnknownAnalysis", "unknown analysis '" + kind + "'");
  });
}

Response Api::chart(const std::string& id, const std::string& kind, const params::ParamMap& q,
                    std::string_view if_none_match) {
  const auto s = sessions_.get(id);
  if (!s) return session_not_found(id);
  return guarded([&]() -> Response {
    if (!render::chart_kind_from_string(kind)) return error(404, "UnknownChart", "unknown chart kind '" + kind + "'");
    const auto request = params::parse_chart_request(kind, q);
    const auto etag = "\"" + s->id.substr(0, 12) + "-" + render::request_hash(request) + "\"";
    Response r;
    r.headers["ETag"] = etag;
    r.headers["Cache-Control"] = "private, max-age=3600";
    if (!if_none_match.empty() && if_none_match == etag) {
      r.status = 304;
      return r;
    }
    r.content_type = "image/svg+xml";
    r.body = render::render(*s->frame, request).text;
    return r;
  });
}

Response Api::chart_sidecar(const std::string& id, const std::string& kind, const params::ParamMap& q) {
  const auto s = sessions_.get(id);
  if (!s) return session_not_found(id);
  return guarded([&]() -> Response {
    if (!render::chart_kind_from_string(kind)) return error(404, "UnknownChart", "unknown chart kind '" + kind + "'");
    const auto doc = render::render(*s->frame, params::parse_chart_request(kind, q));
    return json_response(200, codec::encode(doc));
  });
}

void Api::install(httplib::Server& server) {
  server.set_payload_max_length(config_.max_upload_bytes + (1u << 20));
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"}});
  server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (!res.body.empty()) return;
    std::string code = "HttpError";
    if (res.status == 404) code = "NotFound";
    if (res.status == 413) code = "TooLarge";
    if (res.status == 400) code = "BadRequest";
    res.set_content(codec::error_body(code, httplib::status_message(res.status)).dump(), "application/json");
  });
  server.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
    std::string message = "internal error";
    try {
      if (ep) std::rethrow_exception(ep);
    } catch (const BadRequest& e) {
      res.status = 400;
      res.set_content(codec::error_body(e.code(), e.what()).dump(), "application/json");
      return;
    } catch (const std::exception& e) {
      message = e.what();
    } catch (...) {
    }
    res.status = 500;
    res.set_content(codec::error_body("InternalError", message).dump(), "application/json");
  });

  server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type, If-None-Match");
    res.status = 204;
  });
  server.Get("/api/health", [this](const httplib::Request&, httplib::Response& res) { send(res, health()); });
  server.Get("/api/stations", [this](const httplib::Request& req, httplib::Response& res) {
    send(res, stations(to_params(req)));
  });
  server.Post("/api/sessions", [this](const httplib::Request& req, httplib::Response& res) {
    if (req.is_multipart_form_data()) {
      if (!req.has_file("file")) {
        send(res, error(400, "BadParameter", "multipart upload needs a 'file' part"));
        return;
      }
      const auto part = req.get_file_value("file");
      send(res, create_session(part.content_type, part.content));
      return;
    }
    send(res, create_session(req.get_header_value("Content-Type"), req.body));
  });
  const std::string sid = R"(/api/sessions/([0-9a-f]{32}))";
  server.Get(sid, [this](const httplib::Request& req, httplib::Response& res) {
    send(res, session_info(req.matches[1]));
  });
  server.Delete(sid, [this](const httplib::Request& req, httplib::Response& res) {
    send(res, delete_session(req.matches[1]));
  });
  server.Get(sid + R"(/frame\.csv)", [this](const httplib::Request& req, httplib::Response& res) {
    send(res, frame_csv(req.matches[1]));
  });
  server.Get(sid + "/epw", [this](const httplib::Request& req, httplib::Response& res) {
    send(res, epw_download(req.matches[1]));
  });
  server.Get(sid + "/columns", [this](const httplib::Request& req, httplib::Response& res) {
    send(res, columns(req.matches[1]));
  });
  server.Get(sid + R"(/analysis/([a-z_]+))", [this](const httplib::Request& req, httplib::Response& res) {
    send(res, analysis(req.matches[1], req.matches[2], to_params(req)));
  });
  server.Get(sid + R"(/charts/([a-z_]+)\.svg)", [this](const httplib::Request& req, httplib::Response& res) {
    send(res, chart(req.matches[1], req.matches[2], to_params(req), req.get_header_value("If-None-Match")));
  });
  server.Get(sid + R"(/charts/([a-z_]+)\.json)", [this](const httplib::Request& req, httplib::Response& res) {
    send(res, chart_sidecar(req.matches[1], req.matches[2], to_params(req)));
  });
}

}  // namespace clima::service
