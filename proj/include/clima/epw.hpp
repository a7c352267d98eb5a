#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace clima::epw {

/// Numeric data columns of an EPW row, in file order. The present-weather
/// codes column is textual and lives on HourlyRecord separately.
enum class Field : std::size_t {
  DryBulb,
  DewPoint,
  RelativeHumidity,
  Pressure,
  ExtraterrestrialHorizontal,
  ExtraterrestrialDirectNormal,
  HorizontalInfrared,
  GlobalHorizontal,
  DirectNormal,
  DiffuseHorizontal,
  GlobalHorizontalIlluminance,
  DirectNormalIlluminance,
  DiffuseHorizontalIlluminance,
  ZenithLuminance,
  WindDirection,
  WindSpeed,
  TotalSkyCover,
  OpaqueSkyCover,
  Visibility,
  CeilingHeight,
  PresentWeatherObservation,
  PrecipitableWater,
  AerosolOpticalDepth,
  SnowDepth,
  DaysSinceLastSnowfall,
  Albedo,
  LiquidPrecipitationDepth,
  LiquidPrecipitationQuantity,
};

inline constexpr std::size_t kFieldCount = 28;
inline constexpr std::size_t kColumnsPerRow = 35;

struct FieldSpec {
  Field field;
  std::size_t column;           // 0-based position in the data row
  std::string_view name;        // frame/CSV column name
  std::string_view unit;
  std::optional<double> sentinel;  // values >= sentinel mean "missing"
  std::string_view sentinel_text;  // canonical text re-emitted for absent values
  double min;
  double max;
};

const std::array<FieldSpec, kFieldCount>& field_specs();
const FieldSpec& spec_of(Field f);
std::optional<Field> field_by_name(std::string_view name);

struct Location {
  std::string city;
  std::string state_region;
  std::string country;
  std::string source;
  std::string wmo_id;
  double latitude = 0.0;
  double longitude = 0.0;
  double timezone = 0.0;
  double elevation = 0.0;

  bool operator==(const Location&) const = default;
};

struct DataPeriod {
  std::string name;
  std::string start_weekday;
  int start_month = 1;
  int start_day = 1;
  int end_month = 12;
  int end_day = 31;
  int records_per_hour = 1;

  bool operator==(const DataPeriod&) const = default;
};

struct GroundTemperatures {
  double depth = 0.0;
  std::optional<double> conductivity;
  std::optional<double> density;
  std::optional<double> specific_heat;
  std::array<std::optional<double>, 12> monthly{};

  bool operator==(const GroundTemperatures&) const = default;
};

struct HourlyRecord {
  int year = 0;
  int month = 1;
  int day = 1;
  int hour = 1;  // 1..24, labels the interval (hour-1, hour]
  int minute = 0;
  std::string data_source_flags;
  std::string present_weather_codes;
  std::array<std::optional<double>, kFieldCount> values{};

  [[nodiscard]] const std::optional<double>& get(Field f) const {
    return values[static_cast<std::size_t>(f)];
  }
  std::optional<double>& get(Field f) { return values[static_cast<std::size_t>(f)]; }

  [[nodiscard]] std::optional<double> t_db() const { return get(Field::DryBulb); }
  [[nodiscard]] std::optional<double> t_dp() const { return get(Field::DewPoint); }
  [[nodiscard]] std::optional<double> rh() const { return get(Field::RelativeHumidity); }
  [[nodiscard]] std::optional<double> pressure() const { return get(Field::Pressure); }
  [[nodiscard]] std::optional<double> ghi() const { return get(Field::GlobalHorizontal); }
  [[nodiscard]] std::optional<double> dni() const { return get(Field::DirectNormal); }
  [[nodiscard]] std::optional<double> dhi() const { return get(Field::DiffuseHorizontal); }
  [[nodiscard]] std::optional<double> wind_dir() const { return get(Field::WindDirection); }
  [[nodiscard]] std::optional<double> wind_speed() const { return get(Field::WindSpeed); }

  bool operator==(const HourlyRecord&) const = default;
};

/// Parsed weather file. Header lines that are not interpreted (design
/// conditions, typical/extreme periods, holidays) are kept verbatim.
struct EpwFile {
  Location location;
  std::string design_conditions_line;
  std::string typical_extreme_periods_line;
  std::vector<GroundTemperatures> ground_temperatures;
  std::string holidays_line;
  std::string comments_1;
  std::string comments_2;
  std::vector<DataPeriod> data_periods;
  std::vector<HourlyRecord> records;

  bool operator==(const EpwFile&) const = default;

  /// True for files with one data period at one record per hour, the only
  /// layout the analytics accept.
  [[nodiscard]] bool is_single_hourly_period() const {
    return data_periods.size() == 1 && data_periods.front().records_per_hour == 1;
  }
};

enum class ErrorKind { MalformedHeader, BadRecord, EmptyData, PeriodMismatch, TooLarge };

std::string_view to_string(ErrorKind kind);

class ParseError : public std::runtime_error {
 public:
  ParseError(ErrorKind kind, std::size_t line, const std::string& message);
  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }
  /// 1-based line number, 0 when the error is not tied to a line.
  [[nodiscard]] std::size_t line() const noexcept { return line_; }
  [[nodiscard]] const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::size_t line_;
  std::string detail_;
};

struct Issue {
  ErrorKind kind;
  std::size_t line;
  std::string message;
};

/// Counts collected while reading data rows.
struct ParseReport {
  std::size_t record_count = 0;
  std::map<std::string, std::size_t> missing_count;       // sentinel values
  std::map<std::string, std::size_t> out_of_range_count;  // coerced to absent
};

struct ValidationReport {
  bool ok = false;
  bool header_ok = false;
  std::string header_message;
  std::size_t record_count = 0;
  std::map<std::string, std::size_t> missing_count;  // sentinel + coerced, per field
  std::map<std::string, std::size_t> out_of_range_count;
  std::vector<std::size_t> chronology_violations;  // 1-based line numbers
  std::vector<Issue> issues;
};

struct ParseOptions {
  std::size_t max_bytes = 20u * 1024u * 1024u;
};

struct ParseResult {
  EpwFile file;
  ParseReport report;
};

/// Parses EPW text. Sentinel and out-of-range values become absent.
/// Throws ParseError.
EpwFile parse_epw(std::string_view text, const ParseOptions& options = {});
ParseResult parse_epw_reported(std::string_view text, const ParseOptions& options = {});

/// Emits EPW text; absent values are written as each field's sentinel.
std::string serialize_epw(const EpwFile& file);

/// Structural check that never throws; every problem becomes a report entry.
ValidationReport validate_structure(std::string_view text, const ParseOptions& options = {});

}  // namespace clima::epw
