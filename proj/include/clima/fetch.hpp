#pragma once

#include <atomic>
#include <chrono>
#include <cstddef>
#include <filesystem>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "clima/epw.hpp"
#include "clima/stations.hpp"

namespace clima::service {

class FetchError : public std::runtime_error {
 public:
  /// code: "UpstreamUnavailable" or "UpstreamCorrupt".
  FetchError(std::string code, const std::string& message) : std::runtime_error(message), code_(std::move(code)) {}
  [[nodiscard]] const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

struct FetchOptions {
  std::filesystem::path cache_dir = "cache";
  std::chrono::milliseconds timeout{15000};
  int max_attempts = 3;
  std::chrono::milliseconds backoff{250};
  std::size_t max_bytes = 64u * 1024u * 1024u;
};

struct FetchStats {
  std::size_t network_requests = 0;  // HTTP attempts, including retries
  std::size_t cache_hits = 0;
  std::size_t downloads = 0;  // successful downloads stored in the cache
};

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);

/// Downloads station files over HTTP(S) into a content-addressed cache:
/// objects/<sha256 of content>.epw plus urls/<sha256 of url> naming the
/// object. Files are written to a temporary name and renamed into place, so
/// readers never observe partial entries.
class FetchClient {
 public:
  explicit FetchClient(FetchOptions options);

  /// EPW text of the station, from the cache when present. Throws FetchError.
  std::string fetch_text(const Station& station);
  epw::EpwFile fetch_station_file(const Station& station);

  [[nodiscard]] FetchStats stats() const;
  [[nodiscard]] std::optional<std::filesystem::path> cached_object(const Station& station) const;
  [[nodiscard]] const FetchOptions& options() const noexcept { return options_; }

 private:
  std::string download(const std::string& url);
  void store(const std::string& url, const std::string& text);

  FetchOptions options_;
  mutable std::mutex write_mutex_;
  std::atomic<std::size_t> network_requests_{0};
  std::atomic<std::size_t> cache_hits_{0};
  std::atomic<std::size_t> downloads_{0};
};

}  // namespace clima::service
