#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "clima/analytics.hpp"
#include "clima/frame.hpp"

namespace clima::render {

enum class ChartKind {
  Heatmap,
  YearlyRange,
  DailyProfiles,
  WindRose,
  Psychrometric,
  SunPathSpherical,
  SunPathCartesian,
  DegreeDays,
  Histogram,
  ExplorerScatter,
  MonthlySolar,
};

inline constexpr std::array<ChartKind, 11> kAllChartKinds{
    ChartKind::Heatmap,          ChartKind::YearlyRange,      ChartKind::DailyProfiles, ChartKind::WindRose,
    ChartKind::Psychrometric,    ChartKind::SunPathSpherical, ChartKind::SunPathCartesian, ChartKind::DegreeDays,
    ChartKind::Histogram,        ChartKind::ExplorerScatter,  ChartKind::MonthlySolar};

std::string_view to_string(ChartKind kind);
std::optional<ChartKind> chart_kind_from_string(std::string_view name);

enum class RangeMode { Global, Local };

std::string_view to_string(RangeMode mode);
std::optional<RangeMode> range_mode_from_string(std::string_view name);

struct ChartRequest {
  ChartKind kind = ChartKind::Heatmap;
  std::string variable;                  // empty selects the kind's default
  std::string y_variable;                // explorer only
  std::optional<std::string> color_variable;
  RangeMode range_mode = RangeMode::Global;
  analytics::RowFilter filter;
  int width = 900;
  int height = 540;
  double base_heating = analytics::kDefaultHeatingBase;
  double base_cooling = analytics::kDefaultCoolingBase;
  std::size_t bins = analytics::kDefaultExplorerBins;

  bool operator==(const ChartRequest&) const = default;
};

/// Fills the kind's default variables so equivalent requests compare equal.
ChartRequest with_defaults(ChartRequest request);

/// Canonical text of every request field after defaults, the input to
/// request_hash.
std::string canonical_form(const ChartRequest& request);
/// 64-bit FNV-1a of the canonical form, as 16 lowercase hex digits.
std::string request_hash(const ChartRequest& request);

struct AxisRange {
  double min = 0.0;
  double max = 1.0;
  bool operator==(const AxisRange&) const = default;
};

/// Data-space to pixel mapping of one plot axis.
struct AxisTransform {
  AxisRange domain;
  double pixel_start = 0.0;
  double pixel_end = 0.0;
  bool operator==(const AxisTransform&) const = default;
};

struct SvgDocument {
  std::string text;
  std::string request_hash;
  std::size_t point_count = 0;  // data markers (circles or cells) drawn
  std::optional<AxisTransform> x_axis;
  std::optional<AxisTransform> y_axis;
  std::optional<AxisRange> color_range;
};

/// Preset range for a column from the shipped configuration, if listed.
std::optional<AxisRange> global_range(std::string_view variable);

/// Data span expanded by 5% on each side and snapped outward to a 1/2/2.5/5
/// step; a zero-width span becomes (v - 1, v + 1).
AxisRange nice_local_range(double lo, double hi);

/// Throws UnknownColumn. Global mode falls back to the local rule for
/// columns without a preset; local mode with no data falls back to the
/// preset, then to (0, 1).
AxisRange axis_range(const std::string& variable, RangeMode mode, const analytics::ClimateFrame& frame);

/// Throws UnknownColumn or BadRequest("IncompatibleRequest").
SvgDocument render(const analytics::ClimateFrame& frame, const ChartRequest& request);

}  // namespace clima::render
