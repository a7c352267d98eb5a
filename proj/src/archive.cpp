#include "clima/archive.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>

#include <zlib.h>

namespace clima::service {

namespace {

constexpr std::uint32_t kLocalHeader = 0x04034b50;
constexpr std::uint32_t kCentralHeader = 0x02014b50;
constexpr std::uint32_t kEndOfCentral = 0x06054b50;
constexpr std::size_t kMaxMemberSize = 256u * 1024u * 1024u;

std::uint32_t u16(std::string_view b, std::size_t at) {
  if (at + 2 > b.size()) throw ArchiveError("truncated zip archive");
  return static_cast<std::uint32_t>(static_cast<unsigned char>(b[at])) |
         static_cast<std::uint32_t>(static_cast<unsigned char>(b[at + 1])) << 8;
}

std::uint32_t u32(std::string_view b, std::size_t at) { return u16(b, at) | u16(b, at + 2) << 16; }

std::string inflate_raw(std::string_view in, std::size_t expected) {
  if (expected > kMaxMemberSize) throw ArchiveError("zip member too large");
  std::string out(expected, '\0');
  z_stream zs{};
  if (inflateInit2(&zs, -MAX_WBITS) != Z_OK) throw ArchiveError("cannot initialise inflate");
  zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(in.data()));
  zs.avail_in = static_cast<uInt>(in.size());
  zs.next_out = reinterpret_cast<Bytef*>(out.data());
  zs.avail_out = static_cast<uInt>(out.size());
  const int rc = inflate(&zs, Z_FINISH);
  const auto produced = zs.total_out;
  inflateEnd(&zs);
  if (rc != Z_STREAM_END || produced != expected) throw ArchiveError("corrupt deflate stream in zip member");
  return out;
}

}  // namespace

bool looks_like_zip(std::string_view bytes) { return bytes.size() >= 4 && u32(bytes, 0) == kLocalHeader; }

std::vector<ZipEntry> read_zip(std::string_view b) {
  if (b.size() < 22) throw ArchiveError("too short for a zip archive");
  // End-of-central-directory record sits within the last 64 KiB + 22 bytes.
  std::size_t eocd = std::string_view::npos;
  const std::size_t floor = b.size() > 65557 ? b.size() - 65557 : 0;
  for (std::size_t at = b.size() - 22 + 1; at-- > floor;) {
    if (u32(b, at) == kEndOfCentral) {
      eocd = at;
      break;
    }
  }
  if (eocd == std::string_view::npos) throw ArchiveError("zip end-of-central-directory record not found");
  const std::size_t count = u16(b, eocd + 10);
  std::size_t at = u32(b, eocd + 16);
  std::vector<ZipEntry> entries;
  for (std::size_t i = 0; i < count; ++i) {
    if (u32(b, at) != kCentralHeader) throw ArchiveError("bad zip central directory entry");
    const auto flags = u16(b, at + 8);
    const auto method = u16(b, at + 10);
    const auto crc = u32(b, at + 16);
    const std::size_t csize = u32(b, at + 20);
    const std::size_t usize = u32(b, at + 24);
    const std::size_t name_len = u16(b, at + 28);
    const std::size_t extra_len = u16(b, at + 30);
    const std::size_t comment_len = u16(b, at + 32);
    const std::size_t local = u32(b, at + 42);
    if (at + 46 + name_len > b.size()) throw ArchiveError("truncated zip central directory");
    std::string name(b.substr(at + 46, name_len));
    at += 46 + name_len + extra_len + comment_len;
    if (flags & 0x1) throw ArchiveError("encrypted zip members are not supported");
    if (!name.empty() && name.back() == '/') continue;

    if (u32(b, local) != kLocalHeader) throw ArchiveError("bad zip local header");
    const std::size_t data_at = local + 30 + u16(b, local + 26) + u16(b, local + 28);
    if (data_at + csize > b.size()) throw ArchiveError("truncated zip member");
    const auto raw = b.substr(data_at, csize);
    std::string data;
    if (method == 0) {
      data = std::string(raw);
    } else if (method == 8) {
      data = inflate_raw(raw, usize);
    } else {
      throw ArchiveError("unsupported zip compression method " + std::to_string(method));
    }
    const auto actual = crc32(0L, reinterpret_cast<const Bytef*>(data.data()), static_cast<uInt>(data.size()));
    if (actual != crc) throw ArchiveError("zip member CRC mismatch: " + name);
    entries.push_back({std::move(name), std::move(data)});
  }
  return entries;
}

std::optional<std::string> extract_epw(std::string_view zip_bytes) {
  for (auto& e : read_zip(zip_bytes)) {
    std::string lower = e.name;
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower.size() >= 4 && lower.substr(lower.size() - 4) == ".epw") return std::move(e.data);
  }
  return std::nullopt;
}

}  // namespace clima::service
