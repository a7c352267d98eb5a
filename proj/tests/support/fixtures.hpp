// Shared helpers for tests: reference files, oracle tables, synthetic frames.
#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "clima/calendar.hpp"
#include "clima/csv.hpp"
#include "clima/epw.hpp"
#include "clima/frame.hpp"
#include "clima/numfmt.hpp"

namespace clima::testing {

inline const std::vector<std::string> kReferenceFiles{
    "NLD_Amsterdam062400_IWEC.epw",
    "USA_IL_Chicago-OHare_TMY3.epw",
    "ITA_PVGIS_45.000_8.000_TMY.epw",
};

inline std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(CLIMA_TEST_DATA_DIR) / name;
}

inline std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Parsed files and frames are cached; building a frame takes a few ms.
inline const epw::EpwFile& reference_file(const std::string& name) {
  static std::mutex m;
  static std::map<std::string, std::unique_ptr<epw::EpwFile>> cache;
  std::lock_guard lock(m);
  auto& slot = cache[name];
  if (!slot) slot = std::make_unique<epw::EpwFile>(epw::parse_epw(read_text(data_path(name))));
  return *slot;
}

inline const analytics::ClimateFrame& reference_frame(const std::string& name) {
  static std::mutex m;
  static std::map<std::string, std::unique_ptr<analytics::ClimateFrame>> cache;
  const auto& file = reference_file(name);
  std::lock_guard lock(m);
  auto& slot = cache[name];
  if (!slot) slot = std::make_unique<analytics::ClimateFrame>(analytics::build_frame(file));
  return *slot;
}

/// Oracle table with a header row; values addressed by column name.
struct Table {
  std::vector<std::string> header;
  std::vector<csv::Row> rows;

  [[nodiscard]] std::size_t index(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return i;
    }
    throw std::out_of_range("no column " + name);
  }
  [[nodiscard]] double num(std::size_t row, const std::string& name) const {
    const auto v = parse_double(rows[row][index(name)]);
    if (!v) throw std::runtime_error("not a number in column " + name);
    return *v;
  }
  [[nodiscard]] std::optional<double> maybe(std::size_t row, const std::string& name) const {
    return parse_double(rows[row][index(name)]);
  }
};

inline Table load_table(const std::string& name) {
  auto rows = csv::parse(read_text(data_path(name)));
  Table t;
  t.header = rows.front();
  t.rows.assign(rows.begin() + 1, rows.end());
  return t;
}

/// Calendar columns for `n` hourly rows of a non-leap year starting Jan 1 01:00.
struct Calendar {
  std::vector<int> months, days, hours;
};

inline Calendar hourly_calendar(std::size_t n) {
  Calendar c;
  int month = 1, day = 1, hour = 1;
  for (std::size_t i = 0; i < n; ++i) {
    c.months.push_back(month);
    c.days.push_back(day);
    c.hours.push_back(hour);
    if (++hour > 24) {
      hour = 1;
      if (++day > calendar::days_in_month(month, false)) {
        day = 1;
        month = month % 12 + 1;
      }
    }
  }
  return c;
}

inline analytics::ClimateFrame synthetic_frame(std::vector<analytics::Column> columns, std::size_t n,
                                               epw::Location location = {}) {
  auto cal = hourly_calendar(n);
  return analytics::ClimateFrame::from_columns(std::move(location), 2001, std::move(cal.months), std::move(cal.days),
                                               std::move(cal.hours), std::move(columns));
}

/// A copy of the Amsterdam file whose every record gets `edit` applied.
template <typename F>
epw::EpwFile edited_reference(F&& edit) {
  auto file = reference_file("NLD_Amsterdam062400_IWEC.epw");
  for (auto& r : file.records) edit(r);
  return file;
}

}  // namespace clima::testing
