#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clima/frame.hpp"

namespace clima::analytics {

/// Month (1..12) and hour-label (1..24) selection plus an optional bound on
/// a secondary column. Default-constructed filters keep every row.
struct RowFilter {
  std::array<bool, 12> months{true, true, true, true, true, true, true, true, true, true, true, true};
  std::array<bool, 24> hours{true, true, true, true, true, true, true, true, true, true, true, true,
                             true, true, true, true, true, true, true, true, true, true, true, true};
  std::optional<std::string> variable;
  std::optional<double> variable_min;
  std::optional<double> variable_max;

  [[nodiscard]] bool month_selected(int month) const { return month >= 1 && month <= 12 && months[month - 1]; }
  [[nodiscard]] bool hour_selected(int hour) const { return hour >= 1 && hour <= 24 && hours[hour - 1]; }
  [[nodiscard]] bool all_months() const;
  [[nodiscard]] bool all_hours() const;
  bool operator==(const RowFilter&) const = default;
};

/// Inclusive range with wrap-around when lo > hi, e.g. (11, 2) -> 11,12,1,2.
/// Throws BadRange for values outside [1, upper].
std::array<bool, 12> month_range(int lo, int hi);
std::array<bool, 24> hour_range(int lo, int hi);

/// Parses "a-b" (wrap allowed), "a" or "a,b,c". Throws BadRange.
std::array<bool, 12> parse_months(std::string_view text);
std::array<bool, 24> parse_hours(std::string_view text);

/// Compact canonical form of a selection, e.g. "12,1,2" or "all".
std::string describe_months(const std::array<bool, 12>& months);
std::string describe_hours(const std::array<bool, 24>& hours);

/// Named presets: "annual", "DJF", "MAM", "JJA", "SON", "day" (06-18 local,
/// hour labels 7..18) and "night" (hour labels 19..24 and 1..6).
/// Throws BadRange for unknown names.
RowFilter preset_filter(std::string_view name);

/// Row mask; throws UnknownColumn when the secondary variable is unknown.
std::vector<bool> filter_mask(const ClimateFrame& frame, const RowFilter& filter);

struct MonthExtreme {
  int month = 0;
  std::string name;
  double mean = 0.0;
};

struct KoppenLabel {
  std::string label;  // e.g. "Cfb"; temperature-only group when precipitation is missing
  bool precipitation_missing = false;
};

struct SummaryReport {
  epw::Location location;
  std::size_t record_count = 0;
  std::optional<double> mean_t_db;
  std::optional<MonthExtreme> hottest_month;
  std::optional<MonthExtreme> coldest_month;
  double annual_ghi_kwh = 0.0;  // kWh/m2
  double annual_dhi_kwh = 0.0;
  std::optional<double> diffuse_share;  // percent
  KoppenLabel koppen;
};

SummaryReport climate_summary(const ClimateFrame& frame);

/// Monthly mean dry-bulb temperature; absent for months without data.
std::array<std::optional<double>, 12> monthly_mean_t_db(const ClimateFrame& frame);

KoppenLabel koppen_geiger(const ClimateFrame& frame);
/// Classification from monthly means (C) and monthly precipitation totals
/// (mm); `precipitation` absent gives the temperature-only label.
KoppenLabel koppen_geiger(const std::array<double, 12>& monthly_t, const std::optional<std::array<double, 12>>& precipitation,
                          bool southern_hemisphere);

struct DegreeDayTable {
  double base_heating = 18.0;
  double base_cooling = 21.0;
  std::array<double, 12> hdd{};
  std::array<double, 12> cdd{};
  double annual_hdd = 0.0;
  double annual_cdd = 0.0;
  std::size_t days_counted = 0;
  std::string method = "daily mean";
};

inline constexpr double kDefaultHeatingBase = 18.0;
inline constexpr double kDefaultCoolingBase = 21.0;

/// Daily-mean method; days with more than six absent hours are skipped.
/// Throws BadRange for non-finite bases.
DegreeDayTable degree_days(const ClimateFrame& frame, double base_heating = kDefaultHeatingBase,
                           double base_cooling = kDefaultCoolingBase);

struct NatVentRequest {
  double t_min = 10.0;
  double t_max = 24.0;
  RowFilter filter;
  std::optional<double> radiant_surface_t;
};

struct NatVentResult {
  std::size_t eligible_hours = 0;
  std::size_t total_hours = 0;  // rows inside the month/hour window
  std::vector<bool> mask;
  std::array<std::size_t, 12> eligible_by_month{};
  std::array<std::size_t, 12> total_by_month{};
  NatVentRequest request;
};

/// Throws BadRange if t_min > t_max or either bound is not finite.
NatVentResult natural_ventilation(const ClimateFrame& frame, const NatVentRequest& request);

inline constexpr std::size_t kSectorCount = 16;
inline constexpr std::size_t kSpeedBinCount = 6;
inline constexpr double kCalmThreshold = 0.5;
/// Lower edges of the speed bins, m/s; the last bin is open.
inline constexpr std::array<double, kSpeedBinCount> kSpeedBinEdges{0.5, 2.0, 4.0, 6.0, 8.0, 10.0};

std::string_view sector_name(std::size_t sector);
/// Sector i covers [22.5 i - 11.25, 22.5 i + 11.25) modulo 360.
std::size_t direction_sector(double direction);
/// Index into kSpeedBinEdges for speeds >= 0.5.
std::size_t speed_bin(double speed);

struct WindRose {
  std::array<std::array<double, kSpeedBinCount>, kSectorCount> frequency{};  // percent
  std::array<std::array<std::size_t, kSpeedBinCount>, kSectorCount> counts{};
  double calm = 0.0;  // percent
  std::size_t calm_count = 0;
  std::size_t total = 0;  // rows counted
  std::string descriptor;
};

/// Rows need a wind speed; non-calm rows also need a direction.
WindRose wind_rose(const ClimateFrame& frame, const RowFilter& filter = {});

inline constexpr double kPsychroTemperatureStep = 1.0;   // C
inline constexpr double kPsychroHumidityStep = 0.001;    // kg/kg

/// Index k with k*step <= v < (k+1)*step, robust to rounding of v/step.
long long bin_floor(double value, double step);

struct PsychroCell {
  long long t_bin = 0;  // covers [t_bin, t_bin + 1) C
  long long w_bin = 0;  // covers [w_bin, w_bin + 1) g/kg
  std::size_t count = 0;
  bool operator==(const PsychroCell&) const = default;
};

struct PsychroPoint {
  double t_db = 0.0;
  double humidity_ratio = 0.0;
  std::optional<double> color;
  std::size_t row = 0;
};

struct PsychroData {
  std::optional<std::string> color_by;
  std::vector<PsychroCell> cells;    // frequency mode; sorted by (t_bin, w_bin)
  std::vector<PsychroPoint> points;  // variable mode
  std::size_t row_count = 0;         // rows passing the filter with t_db and w present
};

/// Frequency mode when color_by is empty; otherwise one point per row with
/// t_db, humidity_ratio and the colour value present. Throws UnknownColumn.
PsychroData psychro_bins(const ClimateFrame& frame, const std::optional<std::string>& color_by,
                         const RowFilter& filter = {});

struct Histogram {
  double min = 0.0;
  double max = 0.0;
  std::vector<double> edges;  // bins + 1
  std::vector<std::size_t> counts;
};

/// Uniform bins over [min, max]; the last bin is closed. A zero-width span
/// puts every value in bin 0.
std::size_t uniform_bin(double value, double min, double max, std::size_t bins);
Histogram histogram(const std::vector<double>& values, std::size_t bins);

struct ExplorerPoint {
  double x = 0.0;
  double y = 0.0;
  double color = 0.0;
  std::size_t row = 0;
};

struct ExplorerResult {
  std::string x, y, color;
  std::vector<ExplorerPoint> points;
  Histogram x_hist;
  Histogram y_hist;
  std::vector<std::vector<std::size_t>> heatmap;  // [x bin][y bin]
  std::size_t bins = 20;
};

inline constexpr std::size_t kDefaultExplorerBins = 20;

/// Rows with x, y and color present after filtering. Throws UnknownColumn,
/// BadRange when bins is 0.
ExplorerResult explorer_triple(const ClimateFrame& frame, const std::string& x, const std::string& y,
                               const std::string& color, const RowFilter& filter = {},
                               std::size_t bins = kDefaultExplorerBins);

struct DescriptiveStats {
  std::size_t count = 0;
  std::optional<double> mean, std, min, p25, median, p75, max;
};

struct MonthlyStatistics {
  std::string column;
  std::string unit;
  std::array<DescriptiveStats, 12> months{};
  DescriptiveStats annual;
};

/// Linear interpolation between order statistics; `sorted` ascending, non-empty.
double percentile(const std::vector<double>& sorted, double p);
DescriptiveStats describe(std::vector<double> values);
MonthlyStatistics monthly_statistics(const ClimateFrame& frame, const std::string& column);

struct UtciDistribution {
  std::string scenario;
  std::array<std::array<std::size_t, 10>, 12> monthly{};  // month x category counts
  std::array<std::size_t, 10> annual{};
  std::size_t hours = 0;
};

/// Stress-category counts for one scenario key ("sun_wind", ...). Throws
/// BadRequest "UnknownScenario".
UtciDistribution utci_distribution(const ClimateFrame& frame, std::string_view scenario,
                                   const RowFilter& filter = {});

}  // namespace clima::analytics
