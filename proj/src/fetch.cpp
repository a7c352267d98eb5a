#include "clima/fetch.hpp"

#include <fstream>
#include <sstream>
#include <thread>

#include <httplib.h>
#include <openssl/evp.h>

#include "clima/archive.hpp"

namespace clima::service {

namespace fs = std::filesystem;

namespace {

std::optional<std::string> read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_atomic(const fs::path& target, std::string_view data) {
  fs::create_directories(target.parent_path());
  static std::atomic<unsigned> counter{0};
  auto tmp = target;
  tmp += ".tmp-" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id())) + "-" +
         std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
  }
  fs::rename(tmp, target);
}

struct UrlParts {
  std::string origin;  // scheme://host[:port]
  std::string path;
};

UrlParts split_url(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) throw FetchError("UpstreamUnavailable", "not an absolute URL: " + url);
  const auto scheme = url.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https") throw FetchError("UpstreamUnavailable", "unsupported URL scheme: " + url);
  const auto path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {url, "/"};
  return {url.substr(0, path_start), url.substr(path_start)};
}

}  // namespace

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xf];
  }
  return out;
}

FetchClient::FetchClient(FetchOptions options) : options_(std::move(options)) {}

std::optional<fs::path> FetchClient::cached_object(const Station& station) const {
  const auto ref = read_file(options_.cache_dir / "urls" / sha256_hex(station.url));
  if (!ref || ref->size() != 64) return std::nullopt;
  const auto object = options_.cache_dir / "objects" / (*ref + ".epw");
  if (!fs::exists(object)) return std::nullopt;
  return object;
}

std::string FetchClient::download(const std::string& url) {
  const auto parts = split_url(url);
  std::string last_error = "no attempt made";
  for (int attempt = 0; attempt < std::max(options_.max_attempts, 1); ++attempt) {
    if (attempt > 0) std::this_thread::sleep_for(options_.backoff * attempt);
    ++network_requests_;
    httplib::Client client(parts.origin);
    client.set_connection_timeout(options_.timeout);
    client.set_read_timeout(options_.timeout);
    client.set_write_timeout(options_.timeout);
    client.set_follow_location(true);
    std::string body;
    bool too_large = false;
    auto res = client.Get(parts.path, [&](const char* data, std::size_t len) {
      if (body.size() + len > options_.max_bytes) {
        too_large = true;
        return false;
      }
      body.append(data, len);
      return true;
    });
    if (too_large) throw FetchError("UpstreamCorrupt", "download exceeds size limit: " + url);
    if (!res) {
      last_error = "connection failed: " + httplib::to_string(res.error());
      continue;
    }
    if (res->status >= 500) {
      last_error = "upstream status " + std::to_string(res->status);
      continue;
    }
    if (res->status != 200) {
      throw FetchError("UpstreamUnavailable", "upstream status " + std::to_string(res->status) + " for " + url);
    }
    return body;
  }
  throw FetchError("UpstreamUnavailable", last_error + " for " + url);
}

void FetchClient::store(const std::string& url, const std::string& text) {
  std::lock_guard lock(write_mutex_);
  const auto hash = sha256_hex(text);
  const auto object = options_.cache_dir / "objects" / (hash + ".epw");
  if (!fs::exists(object)) write_atomic(object, text);
  write_atomic(options_.cache_dir / "urls" / sha256_hex(url), hash);
}

std::string FetchClient::fetch_text(const Station& station) {
  if (const auto object = cached_object(station)) {
    if (auto text = read_file(*object)) {
      ++cache_hits_;
      return *text;
    }
  }
  auto body = download(station.url);
  std::string text;
  if (looks_like_zip(body)) {
    try {
      auto member = extract_epw(body);
      if (!member) throw FetchError("UpstreamCorrupt", "archive holds no .epw file: " + station.url);
      text = std::move(*member);
    } catch (const ArchiveError& e) {
      throw FetchError("UpstreamCorrupt", std::string(e.what()) + ": " + station.url);
    }
  } else {
    text = std::move(body);
  }
  try {
    (void)epw::parse_epw(text);
  } catch (const epw::ParseError& e) {
    throw FetchError("UpstreamCorrupt", "downloaded file does not parse: " + std::string(e.what()));
  }
  store(station.url, text);
  ++downloads_;
  return text;
}

epw::EpwFile FetchClient::fetch_station_file(const Station& station) {
  const auto text = fetch_text(station);
  try {
    return epw::parse_epw(text);
  } catch (const epw::ParseError& e) {
    throw FetchError("UpstreamCorrupt", "cached file does not parse: " + std::string(e.what()));
  }
}

FetchStats FetchClient::stats() const { return {network_requests_.load(), cache_hits_.load(), downloads_.load()}; }

}  // namespace clima::service
