#include "clima/stations.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>
#include <stdexcept>

#include "clima/csv.hpp"
#include "clima/error.hpp"
#include "clima/numfmt.hpp"

namespace clima::service {

namespace {

const std::vector<std::string> kHeader{"station_id", "name", "country", "lat", "lon", "url", "source"};

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace

std::string_view to_string(DataSource source) {
  return source == DataSource::EnergyPlus ? "energyplus" : "onebuilding";
}

std::optional<DataSource> data_source_from_string(std::string_view name) {
  const auto n = lower(trim(name));
  if (n == "energyplus") return DataSource::EnergyPlus;
  if (n == "onebuilding") return DataSource::OneBuilding;
  return std::nullopt;
}

bool BoundingBox::contains(double lat, double lon) const {
  if (lat < min_lat || lat > max_lat) return false;
  if (min_lon <= max_lon) return lon >= min_lon && lon <= max_lon;
  return lon >= min_lon || lon <= max_lon;
}

BoundingBox parse_bbox(std::string_view text) {
  std::vector<double> v;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto part = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    const auto d = parse_double(part);
    if (!d) throw BadRequest("BadBoundingBox", "bbox values must be numbers: '" + std::string(text) + "'");
    v.push_back(*d);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (v.size() != 4) throw BadRequest("BadBoundingBox", "bbox needs min_lon,min_lat,max_lon,max_lat");
  BoundingBox b{v[0], v[1], v[2], v[3]};
  const bool lon_ok = std::abs(b.min_lon) <= 180.0 && std::abs(b.max_lon) <= 180.0;
  const bool lat_ok = std::abs(b.min_lat) <= 90.0 && std::abs(b.max_lat) <= 90.0 && b.min_lat <= b.max_lat;
  if (!lon_ok || !lat_ok) throw BadRequest("BadBoundingBox", "bbox outside valid coordinates");
  return b;
}

StationIndex StationIndex::from_csv(std::string_view text) {
  const auto rows = csv::parse(text);
  if (rows.empty()) throw std::invalid_argument("station catalog is empty");
  auto header = rows.front();
  for (auto& h : header) h = lower(trim(h));
  if (header != kHeader) throw std::invalid_argument("station catalog header must be " + csv::join(kHeader));
  StationIndex index;
  std::set<std::string, std::less<>> ids;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() == 1 && trim(row[0]).empty()) continue;
    const auto where = " (catalog row " + std::to_string(r + 1) + ")";
    if (row.size() != kHeader.size()) throw std::invalid_argument("wrong number of fields" + where);
    Station s;
    s.id = std::string(trim(row[0]));
    s.name = std::string(trim(row[1]));
    s.country = std::string(trim(row[2]));
    const auto lat = parse_double(row[3]);
    const auto lon = parse_double(row[4]);
    if (s.id.empty()) throw std::invalid_argument("empty station_id" + where);
    if (!lat || !lon || std::abs(*lat) > 90.0 || std::abs(*lon) > 180.0) {
      throw std::invalid_argument("invalid coordinates" + where);
    }
    s.latitude = *lat;
    s.longitude = *lon;
    s.url = std::string(trim(row[5]));
    const auto src = data_source_from_string(row[6]);
    if (!src) throw std::invalid_argument("unknown source '" + row[6] + "'" + where);
    s.source = *src;
    if (!ids.insert(s.id).second) throw std::invalid_argument("duplicate station_id " + s.id + where);
    index.stations_.push_back(std::move(s));
  }
  return index;
}

void StationIndex::merge(StationIndex other) {
  for (auto& s : other.stations_) {
    if (find(s.id)) throw std::invalid_argument("duplicate station_id " + s.id);
    stations_.push_back(std::move(s));
  }
}

const Station* StationIndex::find(std::string_view id) const {
  for (const auto& s : stations_) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

StationPage StationIndex::query(const StationQuery& q) const {
  StationPage page;
  const auto needle = lower(trim(q.text));
  for (const auto& s : stations_) {
    if (q.bbox && !q.bbox->contains(s.latitude, s.longitude)) continue;
    if (!needle.empty() && lower(s.id).find(needle) == std::string::npos &&
        lower(s.name).find(needle) == std::string::npos && lower(s.country).find(needle) == std::string::npos) {
      continue;
    }
    if (page.total >= q.offset && page.items.size() < q.limit) page.items.push_back(&s);
    ++page.total;
  }
  return page;
}

std::string StationIndex::to_csv(const std::vector<Station>& stations) {
  std::string out = csv::join(kHeader) + "\n";
  for (const auto& s : stations) {
    out += csv::join({s.id, s.name, s.country, format_exact(s.latitude), format_exact(s.longitude), s.url,
                      std::string(to_string(s.source))}) +
           "\n";
  }
  return out;
}

}  // namespace clima::service
