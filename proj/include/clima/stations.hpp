#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace clima::service {

enum class DataSource { EnergyPlus, OneBuilding };

std::string_view to_string(DataSource source);
std::optional<DataSource> data_source_from_string(std::string_view name);

struct Station {
  std::string id;
  std::string name;
  std::string country;
  double latitude = 0.0;
  double longitude = 0.0;
  std::string url;
  DataSource source = DataSource::EnergyPlus;
};

/// Longitude span may cross the antimeridian (min_lon > max_lon).
struct BoundingBox {
  double min_lon = -180.0;
  double min_lat = -90.0;
  double max_lon = 180.0;
  double max_lat = 90.0;

  [[nodiscard]] bool contains(double lat, double lon) const;
};

/// "min_lon,min_lat,max_lon,max_lat". Throws BadRequest("BadBoundingBox").
BoundingBox parse_bbox(std::string_view text);

struct StationQuery {
  std::optional<BoundingBox> bbox;
  std::string text;  // case-insensitive substring of id, name or country
  std::size_t offset = 0;
  std::size_t limit = 100;
};

struct StationPage {
  std::size_t total = 0;  // matches before paging
  std::vector<const Station*> items;
};

/// Station catalog loaded from snapshot CSV files with the header
/// station_id,name,country,lat,lon,url,source.
class StationIndex {
 public:
  StationIndex() = default;

  /// Throws std::invalid_argument on a bad header, a bad row, an invalid
  /// coordinate or a duplicate station_id.
  static StationIndex from_csv(std::string_view text);
  /// Adds another catalog; duplicate ids across catalogs are rejected too.
  void merge(StationIndex other);

  [[nodiscard]] const std::vector<Station>& stations() const noexcept { return stations_; }
  [[nodiscard]] std::size_t size() const noexcept { return stations_.size(); }
  [[nodiscard]] const Station* find(std::string_view id) const;
  [[nodiscard]] StationPage query(const StationQuery& q) const;

  static std::string to_csv(const std::vector<Station>& stations);

 private:
  std::vector<Station> stations_;
};

}  // namespace clima::service
