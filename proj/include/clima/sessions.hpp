#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <list>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>

#include "clima/epw.hpp"
#include "clima/frame.hpp"

namespace clima::service {

using Clock = std::chrono::system_clock;

/// Immutable after creation; shared by concurrent requests.
struct Session {
  std::string id;
  std::string source;  // "upload" or "station:<id>"
  std::shared_ptr<const epw::EpwFile> file;
  std::shared_ptr<const analytics::ClimateFrame> frame;
  Clock::time_point created_at;
  Clock::time_point expires_at;
};

struct SessionOptions {
  std::chrono::seconds ttl = std::chrono::hours(24);
  std::size_t capacity = 64;
};

/// Session table with expiry and least-recently-used eviction.
class SessionStore {
 public:
  using Now = std::function<Clock::time_point()>;

  explicit SessionStore(SessionOptions options = {}, Now now = [] { return Clock::now(); });

  std::shared_ptr<const Session> create(epw::EpwFile file, analytics::ClimateFrame frame, std::string source);
  /// Null for unknown or expired ids; a hit refreshes LRU order.
  std::shared_ptr<const Session> get(const std::string& id);
  bool remove(const std::string& id);
  std::size_t size() const;
  const SessionOptions& options() const noexcept { return options_; }

 private:
  void purge_expired(Clock::time_point now);

  SessionOptions options_;
  Now now_;
  mutable std::mutex mutex_;
  std::list<std::shared_ptr<const Session>> order_;  // most recent first
  std::unordered_map<std::string, std::list<std::shared_ptr<const Session>>::iterator> index_;
};

/// 128 random bits as 32 hex digits.
std::string new_session_id();

}  // namespace clima::service
