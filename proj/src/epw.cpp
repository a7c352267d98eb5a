#include "clima/epw.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "clima/calendar.hpp"
#include "clima/numfmt.hpp"

namespace clima::epw {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Missing-value sentinels and valid ranges follow the EnergyPlus weather data
// dictionary. Wind direction keeps 360 as a valid north reading.
const std::array<FieldSpec, kFieldCount> kSpecs{{
    {Field::DryBulb, 6, "t_db", "C", 99.9, "99.9", -70.0, 70.0},
    {Field::DewPoint, 7, "t_dp", "C", 99.9, "99.9", -70.0, 70.0},
    {Field::RelativeHumidity, 8, "rh", "%", 999.0, "999", 0.0, 100.0},
    {Field::Pressure, 9, "pressure", "Pa", 999999.0, "999999", 31000.0, 120000.0},
    {Field::ExtraterrestrialHorizontal, 10, "extraterrestrial_horizontal", "Wh/m2", 9999.0, "9999", 0.0, kInf},
    {Field::ExtraterrestrialDirectNormal, 11, "extraterrestrial_direct_normal", "Wh/m2", 9999.0, "9999", 0.0, kInf},
    {Field::HorizontalInfrared, 12, "horizontal_infrared", "Wh/m2", 9999.0, "9999", 0.0, kInf},
    {Field::GlobalHorizontal, 13, "ghi", "Wh/m2", 9999.0, "9999", 0.0, kInf},
    {Field::DirectNormal, 14, "dni", "Wh/m2", 9999.0, "9999", 0.0, kInf},
    {Field::DiffuseHorizontal, 15, "dhi", "Wh/m2", 9999.0, "9999", 0.0, kInf},
    {Field::GlobalHorizontalIlluminance, 16, "global_horizontal_illuminance", "lux", 999999.0, "999999", 0.0, kInf},
    {Field::DirectNormalIlluminance, 17, "direct_normal_illuminance", "lux", 999999.0, "999999", 0.0, kInf},
    {Field::DiffuseHorizontalIlluminance, 18, "diffuse_horizontal_illuminance", "lux", 999999.0, "999999", 0.0, kInf},
    {Field::ZenithLuminance, 19, "zenith_luminance", "cd/m2", 9999.0, "9999", 0.0, kInf},
    {Field::WindDirection, 20, "wind_dir", "deg", 999.0, "999", 0.0, 360.0},
    {Field::WindSpeed, 21, "wind_speed", "m/s", 999.0, "999", 0.0, 40.0},
    {Field::TotalSkyCover, 22, "total_sky_cover", "tenths", 99.0, "99", 0.0, 10.0},
    {Field::OpaqueSkyCover, 23, "opaque_sky_cover", "tenths", 99.0, "99", 0.0, 10.0},
    {Field::Visibility, 24, "visibility", "km", 9999.0, "9999", 0.0, kInf},
    {Field::CeilingHeight, 25, "ceiling_height", "m", 99999.0, "99999", 0.0, kInf},
    {Field::PresentWeatherObservation, 26, "present_weather_observation", "", std::nullopt, "9", -kInf, kInf},
    {Field::PrecipitableWater, 28, "precipitable_water", "mm", 999.0, "999", 0.0, kInf},
    {Field::AerosolOpticalDepth, 29, "aerosol_optical_depth", "", 0.999, "0.999", 0.0, kInf},
    {Field::SnowDepth, 30, "snow_depth", "cm", 999.0, "999", 0.0, kInf},
    {Field::DaysSinceLastSnowfall, 31, "days_since_last_snowfall", "days", 99.0, "99", 0.0, kInf},
    {Field::Albedo, 32, "albedo", "", 999.0, "999", 0.0, kInf},
    {Field::LiquidPrecipitationDepth, 33, "liquid_precipitation_depth", "mm", 999.0, "999", 0.0, kInf},
    {Field::LiquidPrecipitationQuantity, 34, "liquid_precipitation_quantity", "h", 99.0, "99", 0.0, kInf},
}};

constexpr std::size_t kFlagsColumn = 5;
constexpr std::size_t kWeatherCodesColumn = 27;
constexpr std::size_t kHeaderLines = 8;

constexpr std::array<std::string_view, kHeaderLines> kHeaderKeywords{
    "LOCATION",         "DESIGN CONDITIONS", "TYPICAL/EXTREME PERIODS", "GROUND TEMPERATURES",
    "HOLIDAYS/DAYLIGHT SAVING", "COMMENTS 1", "COMMENTS 2",             "DATA PERIODS"};

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    auto pos = text.find('\n', start);
    auto end = pos == std::string_view::npos ? text.size() : pos;
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  return lines;
}

// Drops trailing empty fields left by a dangling comma.
void drop_trailing_empty(std::vector<std::string_view>& fields, std::size_t keep) {
  while (fields.size() > keep && trim(fields.back()).empty()) fields.pop_back();
}

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.size() >= prefix.size() && s.substr(0, prefix.size()) == prefix;
}

Location parse_location(std::string_view line) {
  auto f = split(line, ',');
  drop_trailing_empty(f, 10);
  if (f.size() != 10 || trim(f[0]) != "LOCATION") {
    throw ParseError(ErrorKind::MalformedHeader, 1, "LOCATION line must have 10 fields");
  }
  Location loc;
  loc.city = std::string(f[1]);
  loc.state_region = std::string(f[2]);
  loc.country = std::string(f[3]);
  loc.source = std::string(f[4]);
  loc.wmo_id = std::string(f[5]);
  auto num = [&](std::size_t i, const char* what, double lo, double hi) {
    auto v = parse_double(f[i]);
    if (!v) throw ParseError(ErrorKind::MalformedHeader, 1, std::string("unparseable ") + what);
    if (*v < lo || *v > hi) throw ParseError(ErrorKind::MalformedHeader, 1, std::string(what) + " out of range");
    return *v;
  };
  loc.latitude = num(6, "latitude", -90.0, 90.0);
  loc.longitude = num(7, "longitude", -180.0, 180.0);
  loc.timezone = num(8, "timezone", -12.0, 14.0);
  loc.elevation = num(9, "elevation", -1000.0, 9999.9);
  return loc;
}

std::optional<double> optional_number(std::string_view field, std::size_t line, const char* what) {
  if (trim(field).empty()) return std::nullopt;
  auto v = parse_double(field);
  if (!v) throw ParseError(ErrorKind::MalformedHeader, line, std::string("unparseable ") + what);
  return v;
}

std::vector<GroundTemperatures> parse_ground(std::string_view line) {
  auto f = split(line, ',');
  auto count = f.size() > 1 ? parse_int(f[1]) : std::nullopt;
  if (!count || *count < 0 || *count > 64) {
    throw ParseError(ErrorKind::MalformedHeader, 4, "bad ground temperature count");
  }
  const auto n = static_cast<std::size_t>(*count);
  drop_trailing_empty(f, 2 + 16 * n);
  if (f.size() != 2 + 16 * n) throw ParseError(ErrorKind::MalformedHeader, 4, "wrong ground temperature field count");
  std::vector<GroundTemperatures> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t base = 2 + 16 * k;
    auto depth = parse_double(f[base]);
    if (!depth) throw ParseError(ErrorKind::MalformedHeader, 4, "unparseable ground depth");
    out[k].depth = *depth;
    out[k].conductivity = optional_number(f[base + 1], 4, "soil conductivity");
    out[k].density = optional_number(f[base + 2], 4, "soil density");
    out[k].specific_heat = optional_number(f[base + 3], 4, "soil specific heat");
    for (std::size_t m = 0; m < 12; ++m) out[k].monthly[m] = optional_number(f[base + 4 + m], 4, "ground temperature");
  }
  return out;
}

std::pair<int, int> parse_month_day(std::string_view text) {
  auto parts = split(trim(text), '/');
  if (parts.size() < 2 || parts.size() > 3) throw ParseError(ErrorKind::MalformedHeader, 8, "bad data period date");
  auto m = parse_int(parts[0]);
  auto d = parse_int(parts[1]);
  if (!m || !d || *m < 1 || *m > 12 || *d < 1 || *d > calendar::days_in_month(static_cast<int>(*m), true)) {
    throw ParseError(ErrorKind::MalformedHeader, 8, "bad data period date");
  }
  return {static_cast<int>(*m), static_cast<int>(*d)};
}

std::vector<DataPeriod> parse_periods(std::string_view line) {
  auto f = split(line, ',');
  if (f.size() < 3) throw ParseError(ErrorKind::MalformedHeader, 8, "DATA PERIODS line too short");
  auto count = parse_int(f[1]);
  auto rph = parse_int(f[2]);
  if (!count || *count < 1 || *count > 366) throw ParseError(ErrorKind::MalformedHeader, 8, "bad data period count");
  if (!rph || *rph < 1 || *rph > 60) throw ParseError(ErrorKind::MalformedHeader, 8, "bad records per hour");
  const auto n = static_cast<std::size_t>(*count);
  drop_trailing_empty(f, 3 + 4 * n);
  if (f.size() != 3 + 4 * n) throw ParseError(ErrorKind::MalformedHeader, 8, "wrong DATA PERIODS field count");
  std::vector<DataPeriod> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t base = 3 + 4 * k;
    out[k].name = std::string(trim(f[base]));
    out[k].start_weekday = std::string(trim(f[base + 1]));
    std::tie(out[k].start_month, out[k].start_day) = parse_month_day(f[base + 2]);
    std::tie(out[k].end_month, out[k].end_day) = parse_month_day(f[base + 3]);
    out[k].records_per_hour = static_cast<int>(*rph);
  }
  return out;
}

std::string comment_text(std::string_view line, std::string_view keyword) {
  auto rest = line.substr(keyword.size());
  if (!rest.empty() && rest.front() == ',') rest.remove_prefix(1);
  return std::string(rest);
}

// Days covered by a period on a non-leap calendar, wrapping over year end.
int period_days(const DataPeriod& p) {
  const int start = calendar::day_of_year(p.start_month, p.start_day, false);
  const int end = calendar::day_of_year(p.end_month, p.end_day, false);
  return end >= start ? end - start + 1 : 365 - start + 1 + end;
}

// Hour ordinal on a leap calendar: Feb 29 always has a slot so that a skipped
// Feb 29 shows up as a jump of 24 hours.
int hour_ordinal(const HourlyRecord& r) {
  return (calendar::day_of_year(r.month, r.day, true) - 1) * 24 + r.hour;
}

bool follows(int prev, int next) {
  constexpr int kFeb28End = 59 * 24;
  constexpr int kYearEnd = 366 * 24;
  if (next == prev + 1) return true;
  if (prev == kFeb28End && next == kFeb28End + 25) return true;  // no Feb 29
  if (prev == kYearEnd && next == 1) return true;               // wrap
  return false;
}

class Scanner {
 public:
  Scanner(bool stop_on_error, ValidationReport* report) : stop_(stop_on_error), report_(report) {}

  void fail(ErrorKind kind, std::size_t line, const std::string& message) {
    if (stop_) throw ParseError(kind, line, message);
    report_->issues.push_back({kind, line, message});
  }

  ParseResult run(std::string_view text, const ParseOptions& options) {
    ParseResult result;
    if (text.size() > options.max_bytes) {
      fail(ErrorKind::TooLarge, 0, "input exceeds " + std::to_string(options.max_bytes) + " bytes");
      return result;
    }
    auto lines = split_lines(text);
    if (!read_header(lines, result.file)) return result;

    auto& records = result.file.records;
    records.reserve(lines.size() > kHeaderLines ? lines.size() - kHeaderLines : 0);
    const int rph = result.file.data_periods.front().records_per_hour;
    int prev_ordinal = -1;
    int repeats = 0;
    bool saw_feb29 = false;
    for (std::size_t i = kHeaderLines; i < lines.size(); ++i) {
      const std::size_t line_no = i + 1;
      auto rec = parse_record(lines[i], line_no, result.report);
      if (!rec) {
        prev_ordinal = -1;
        continue;
      }
      const int ord = hour_ordinal(*rec);
      if (rec->month == 2 && rec->day == 29) saw_feb29 = true;
      bool in_order = true;
      if (prev_ordinal >= 0) {
        if (ord == prev_ordinal && repeats < rph) {
          ++repeats;
        } else if (repeats == rph && follows(prev_ordinal, ord)) {
          repeats = 1;
        } else {
          in_order = false;
        }
      } else {
        repeats = 1;
      }
      if (!in_order) {
        if (report_) report_->chronology_violations.push_back(line_no);
        fail(ErrorKind::BadRecord, line_no, "record out of chronological order");
        repeats = 1;
      }
      prev_ordinal = ord;
      records.push_back(std::move(*rec));
    }
    result.report.record_count = records.size();
    if (records.empty()) {
      fail(ErrorKind::EmptyData, 0, "file contains no data records");
      return result;
    }
    std::size_t expected = 0;
    for (const auto& p : result.file.data_periods) {
      int days = period_days(p);
      if (saw_feb29 && calendar::day_of_year(p.start_month, p.start_day, true) <= 60 &&
          calendar::day_of_year(p.end_month, p.end_day, true) >= 60) {
        ++days;
      }
      expected += static_cast<std::size_t>(days) * 24u * static_cast<std::size_t>(p.records_per_hour);
    }
    if (expected != records.size()) {
      fail(ErrorKind::PeriodMismatch, 8,
           "data periods declare " + std::to_string(expected) + " records, found " + std::to_string(records.size()));
    }
    return result;
  }

 private:
  bool read_header(const std::vector<std::string_view>& lines, EpwFile& file) {
    if (lines.size() < kHeaderLines) {
      header_error(lines.empty() ? 1 : lines.size(), "file has fewer than 8 header lines");
      return false;
    }
    for (std::size_t i = 0; i < kHeaderLines; ++i) {
      if (!starts_with(lines[i], kHeaderKeywords[i])) {
        header_error(i + 1, "header line " + std::to_string(i + 1) + " must start with " +
                                std::string(kHeaderKeywords[i]));
        return false;
      }
    }
    try {
      file.location = parse_location(lines[0]);
      file.design_conditions_line = std::string(lines[1]);
      file.typical_extreme_periods_line = std::string(lines[2]);
      file.ground_temperatures = parse_ground(lines[3]);
      file.holidays_line = std::string(lines[4]);
      file.comments_1 = comment_text(lines[5], kHeaderKeywords[5]);
      file.comments_2 = comment_text(lines[6], kHeaderKeywords[6]);
      file.data_periods = parse_periods(lines[7]);
    } catch (const ParseError& e) {
      if (stop_) throw;
      header_error(e.line(), e.detail());
      return false;
    }
    if (report_) report_->header_ok = true;
    return true;
  }

  void header_error(std::size_t line, const std::string& message) {
    if (report_) report_->header_message = message;
    fail(ErrorKind::MalformedHeader, line, message);
  }

  std::optional<HourlyRecord> parse_record(std::string_view line, std::size_t line_no, ParseReport& counts) {
    auto f = split(line, ',');
    if (f.size() != kColumnsPerRow) {
      fail(ErrorKind::BadRecord, line_no,
           "expected 35 fields, found " + std::to_string(f.size()));
      return std::nullopt;
    }
    HourlyRecord rec;
    std::array<long long, 5> stamp{};
    for (std::size_t i = 0; i < 5; ++i) {
      auto v = parse_int(f[i]);
      if (!v) {
        fail(ErrorKind::BadRecord, line_no, "unparseable date/time field " + std::to_string(i + 1));
        return std::nullopt;
      }
      stamp[i] = *v;
    }
    if (stamp[1] < 1 || stamp[1] > 12 || stamp[3] < 1 || stamp[3] > 24 || stamp[4] < 0 || stamp[4] > 60 ||
        stamp[2] < 1 || stamp[2] > calendar::days_in_month(static_cast<int>(stamp[1]), true) ||
        stamp[0] < -9999 || stamp[0] > 9999) {
      fail(ErrorKind::BadRecord, line_no, "invalid date/time");
      return std::nullopt;
    }
    rec.year = static_cast<int>(stamp[0]);
    rec.month = static_cast<int>(stamp[1]);
    rec.day = static_cast<int>(stamp[2]);
    rec.hour = static_cast<int>(stamp[3]);
    rec.minute = static_cast<int>(stamp[4]);
    rec.data_source_flags = std::string(f[kFlagsColumn]);
    rec.present_weather_codes = std::string(trim(f[kWeatherCodesColumn]));

    for (const auto& spec : kSpecs) {
      auto v = parse_double(f[spec.column]);
      if (!v) {
        fail(ErrorKind::BadRecord, line_no, "unparseable " + std::string(spec.name));
        return std::nullopt;
      }
      const std::string name(spec.name);
      if (spec.sentinel && *v >= *spec.sentinel) {
        ++counts.missing_count[name];
        continue;
      }
      if (*v < spec.min || *v > spec.max) {
        ++counts.out_of_range_count[name];
        continue;
      }
      rec.get(spec.field) = *v;
    }
    return rec;
  }

  bool stop_;
  ValidationReport* report_;
};

std::string format_month_day(int m, int d) { return std::to_string(m) + "/" + std::to_string(d); }

std::string format_optional(const std::optional<double>& v) { return v ? format_exact(*v) : std::string(); }

}  // namespace

const std::array<FieldSpec, kFieldCount>& field_specs() { return kSpecs; }

const FieldSpec& spec_of(Field f) { return kSpecs[static_cast<std::size_t>(f)]; }

std::optional<Field> field_by_name(std::string_view name) {
  for (const auto& s : kSpecs) {
    if (s.name == name) return s.field;
  }
  return std::nullopt;
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedHeader: return "MalformedHeader";
    case ErrorKind::BadRecord: return "BadRecord";
    case ErrorKind::EmptyData: return "EmptyData";
    case ErrorKind::PeriodMismatch: return "PeriodMismatch";
    case ErrorKind::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

ParseError::ParseError(ErrorKind kind, std::size_t line, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + (line ? " at line " + std::to_string(line) : "") + ": " +
                         message),
      kind_(kind),
      line_(line),
      detail_(message) {}

ParseResult parse_epw_reported(std::string_view text, const ParseOptions& options) {
  Scanner scanner(true, nullptr);
  return scanner.run(text, options);
}

EpwFile parse_epw(std::string_view text, const ParseOptions& options) {
  return parse_epw_reported(text, options).file;
}

ValidationReport validate_structure(std::string_view text, const ParseOptions& options) {
  ValidationReport report;
  Scanner scanner(false, &report);
  auto result = scanner.run(text, options);
  report.record_count = result.report.record_count;
  report.out_of_range_count = result.report.out_of_range_count;
  for (const auto& spec : kSpecs) {
    const std::string name(spec.name);
    std::size_t missing = 0;
    if (auto it = result.report.missing_count.find(name); it != result.report.missing_count.end()) missing += it->second;
    if (auto it = result.report.out_of_range_count.find(name); it != result.report.out_of_range_count.end()) {
      missing += it->second;
    }
    report.missing_count[name] = missing;
  }
  report.ok = report.header_ok && report.issues.empty();
  return report;
}

std::string serialize_epw(const EpwFile& file) {
  std::string out;
  out.reserve(file.records.size() * 160 + 4096);
  const auto& loc = file.location;
  out += "LOCATION," + loc.city + "," + loc.state_region + "," + loc.country + "," + loc.source + "," + loc.wmo_id +
         "," + format_exact(loc.latitude) + "," + format_exact(loc.longitude) + "," + format_exact(loc.timezone) + "," +
         format_exact(loc.elevation) + "\n";
  out += file.design_conditions_line + "\n";
  out += file.typical_extreme_periods_line + "\n";
  out += "GROUND TEMPERATURES," + std::to_string(file.ground_temperatures.size());
  for (const auto& g : file.ground_temperatures) {
    out += "," + format_exact(g.depth) + "," + format_optional(g.conductivity) + "," + format_optional(g.density) +
           "," + format_optional(g.specific_heat);
    for (const auto& m : g.monthly) out += "," + format_optional(m);
  }
  out += "\n";
  out += file.holidays_line + "\n";
  out += "COMMENTS 1," + file.comments_1 + "\n";
  out += "COMMENTS 2," + file.comments_2 + "\n";
  const int rph = file.data_periods.empty() ? 1 : file.data_periods.front().records_per_hour;
  out += "DATA PERIODS," + std::to_string(file.data_periods.size()) + "," + std::to_string(rph);
  for (const auto& p : file.data_periods) {
    out += "," + p.name + "," + p.start_weekday + "," + format_month_day(p.start_month, p.start_day) + "," +
           format_month_day(p.end_month, p.end_day);
  }
  out += "\n";

  std::array<std::string, kColumnsPerRow> cols;
  for (const auto& r : file.records) {
    cols[0] = std::to_string(r.year);
    cols[1] = std::to_string(r.month);
    cols[2] = std::to_string(r.day);
    cols[3] = std::to_string(r.hour);
    cols[4] = std::to_string(r.minute);
    cols[kFlagsColumn] = r.data_source_flags;
    cols[kWeatherCodesColumn] = r.present_weather_codes;
    for (const auto& spec : kSpecs) {
      const auto& v = r.get(spec.field);
      cols[spec.column] = v ? format_exact(*v) : std::string(spec.sentinel_text);
    }
    for (std::size_t i = 0; i < kColumnsPerRow; ++i) {
      if (i) out += ',';
      out += cols[i];
    }
    out += '\n';
  }
  return out;
}

}  // namespace clima::epw
