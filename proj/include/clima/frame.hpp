#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clima/epw.hpp"

namespace clima::analytics {

/// One value per frame row; std::nullopt marks an absent value.
using Series = std::vector<std::optional<double>>;

struct Column {
  std::string name;
  std::string unit;
  Series values;
};

/// Columnar table of EPW variables plus derived quantities, one row per
/// hourly record. Immutable once built.
class ClimateFrame {
 public:
  ClimateFrame() = default;

  [[nodiscard]] std::size_t size() const noexcept { return month_.size(); }
  [[nodiscard]] std::size_t day_count() const noexcept { return size() / 24; }
  [[nodiscard]] const epw::Location& location() const noexcept { return location_; }
  [[nodiscard]] int reference_year() const noexcept { return reference_year_; }

  [[nodiscard]] const std::vector<int>& months() const noexcept { return month_; }
  [[nodiscard]] const std::vector<int>& days() const noexcept { return day_; }
  [[nodiscard]] const std::vector<int>& hours() const noexcept { return hour_; }
  /// 1-based day of year, counting Feb 29 when the file carries it.
  [[nodiscard]] const std::vector<int>& days_of_year() const noexcept { return doy_; }

  [[nodiscard]] const std::vector<Column>& columns() const noexcept { return columns_; }
  [[nodiscard]] bool has_column(std::string_view name) const;
  /// Throws UnknownColumn.
  [[nodiscard]] const Column& column(std::string_view name) const;
  [[nodiscard]] const Series& values(std::string_view name) const { return column(name).values; }

  /// Formulation notes and model constants, recorded for exports.
  [[nodiscard]] const std::map<std::string, std::string>& metadata() const noexcept { return metadata_; }

  /// Builds a frame from explicit columns. Intended for synthetic data in
  /// tests and tools; `build_frame` is the normal route.
  static ClimateFrame from_columns(epw::Location location, int reference_year, std::vector<int> months,
                                   std::vector<int> days, std::vector<int> hours, std::vector<Column> columns);

 private:
  friend ClimateFrame build_frame(const epw::EpwFile& file);
  void add_column(std::string name, std::string unit, Series values);
  void index_columns();

  epw::Location location_;
  int reference_year_ = 2001;
  std::vector<int> month_;
  std::vector<int> day_;
  std::vector<int> hour_;
  std::vector<int> doy_;
  std::vector<Column> columns_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::map<std::string, std::string> metadata_;
};

/// Derived column names in export order.
const std::vector<std::string>& derived_column_names();

/// Throws BadRequest with code "UnsupportedCadence" for files that are not a
/// single full year at one record per hour.
ClimateFrame build_frame(const epw::EpwFile& file);

/// RFC 4180 text: header "name [unit]", absent values as empty fields.
std::string export_frame_csv(const ClimateFrame& frame);

}  // namespace clima::analytics
