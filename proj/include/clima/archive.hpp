#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace clima::service {

struct ZipEntry {
  std::string name;
  std::string data;
};

class ArchiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool looks_like_zip(std::string_view bytes);

/// Reads every file entry of a ZIP archive (stored or deflated members).
/// Throws ArchiveError on a malformed archive or a CRC mismatch.
std::vector<ZipEntry> read_zip(std::string_view bytes);

/// First member whose name ends in ".epw" (case-insensitive), if any.
std::optional<std::string> extract_epw(std::string_view zip_bytes);

}  // namespace clima::service
