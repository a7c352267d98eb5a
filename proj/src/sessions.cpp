#include "clima/sessions.hpp"

#include <stdexcept>

#include <openssl/rand.h>

namespace clima::service {

std::string new_session_id() {
  unsigned char bytes[16];
  if (RAND_bytes(bytes, sizeof bytes) != 1) throw std::runtime_error("random source unavailable");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned char b : bytes) {
    out += kHex[b >> 4];
    out += kHex[b & 0xf];
  }
  return out;
}

SessionStore::SessionStore(SessionOptions options, Now now) : options_(options), now_(std::move(now)) {
  if (options_.capacity == 0) options_.capacity = 1;
}

std::shared_ptr<const Session> SessionStore::create(epw::EpwFile file, analytics::ClimateFrame frame,
                                                    std::string source) {
  auto s = std::make_shared<Session>();
  s->id = new_session_id();
  s->source = std::move(source);
  s->file = std::make_shared<const epw::EpwFile>(std::move(file));
  s->frame = std::make_shared<const analytics::ClimateFrame>(std::move(frame));
  s->created_at = now_();
  s->expires_at = s->created_at + options_.ttl;
  std::shared_ptr<const Session> shared = s;

  std::lock_guard lock(mutex_);
  purge_expired(s->created_at);
  order_.push_front(shared);
  index_[shared->id] = order_.begin();
  while (order_.size() > options_.capacity) {
    index_.erase(order_.back()->id);
    order_.pop_back();
  }
  return shared;
}

std::shared_ptr<const Session> SessionStore::get(const std::string& id) {
  std::lock_guard lock(mutex_);
  auto it = index_.find(id);
  if (it == index_.end()) return nullptr;
  auto session = *it->second;
  if (now_() >= session->expires_at) {
    order_.erase(it->second);
    index_.erase(it);
    return nullptr;
  }
  order_.splice(order_.begin(), order_, it->second);
  return session;
}

bool SessionStore::remove(const std::string& id) {
  std::lock_guard lock(mutex_);
  auto it = index_.find(id);
  if (it == index_.end()) return false;
  order_.erase(it->second);
  index_.erase(it);
  return true;
}

std::size_t SessionStore::size() const {
  std::lock_guard lock(mutex_);
  return order_.size();
}

void SessionStore::purge_expired(Clock::time_point now) {
  for (auto it = order_.begin(); it != order_.end();) {
    if (now >= (*it)->expires_at) {
      index_.erase((*it)->id);
      it = order_.erase(it);
    } else {
      ++it;
    }
  }
}

}  // namespace clima::service
