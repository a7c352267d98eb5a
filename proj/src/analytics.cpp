#include "clima/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "clima/calendar.hpp"
#include "clima/comfort.hpp"
#include "clima/error.hpp"
#include "clima/numfmt.hpp"
#include "clima/thermo.hpp"

namespace clima::analytics {

namespace {

BadRequest bad_range(const std::string& message) { return BadRequest("BadRange", message); }

template <std::size_t N>
std::array<bool, N> wrap_range(int lo, int hi, const char* what) {
  const int upper = static_cast<int>(N);
  if (lo < 1 || lo > upper || hi < 1 || hi > upper) {
    throw bad_range(std::string(what) + " range must lie in 1.." + std::to_string(upper));
  }
  std::array<bool, N> out{};
  for (int v = lo;; v = v % upper + 1) {
    out[static_cast<std::size_t>(v - 1)] = true;
    if (v == hi) break;
  }
  return out;
}

template <std::size_t N>
std::array<bool, N> parse_selection(std::string_view text, const char* what) {
  const auto t = trim(text);
  std::array<bool, N> out{};
  if (t.empty() || t == "all") {
    out.fill(true);
    return out;
  }
  auto as_int = [&](std::string_view s) {
    const auto v = parse_int(s);
    if (!v) throw bad_range(std::string("cannot read ") + what + " value '" + std::string(s) + "'");
    return static_cast<int>(*v);
  };
  std::size_t start = 0;
  while (start <= t.size()) {
    const auto comma = t.find(',', start);
    const auto item = trim(t.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (item.empty()) throw bad_range(std::string("empty ") + what + " item");
    const auto dash = item.find('-', 1);
    std::array<bool, N> part{};
    if (dash == std::string_view::npos) {
      const int v = as_int(item);
      part = wrap_range<N>(v, v, what);
    } else {
      part = wrap_range<N>(as_int(item.substr(0, dash)), as_int(item.substr(dash + 1)), what);
    }
    for (std::size_t i = 0; i < N; ++i) out[i] = out[i] || part[i];
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template <std::size_t N>
std::string describe_selection(const std::array<bool, N>& sel) {
  if (std::all_of(sel.begin(), sel.end(), [](bool b) { return b; })) return "all";
  // Start after an unselected slot so wrapped runs print in order (12,1,2).
  std::size_t first = 0;
  for (std::size_t i = 0; i < N; ++i) {
    if (!sel[i]) {
      first = (i + 1) % N;
      break;
    }
  }
  std::string out;
  for (std::size_t k = 0; k < N; ++k) {
    const std::size_t i = (first + k) % N;
    if (!sel[i]) continue;
    if (!out.empty()) out += ',';
    out += std::to_string(i + 1);
  }
  return out.empty() ? "none" : out;
}

bool all_true(const auto& a) {
  return std::all_of(a.begin(), a.end(), [](bool b) { return b; });
}

std::optional<double> mean_of(const std::vector<double>& v) {
  if (v.empty()) return std::nullopt;
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

}  // namespace

bool RowFilter::all_months() const { return all_true(months); }
bool RowFilter::all_hours() const { return all_true(hours); }

std::array<bool, 12> month_range(int lo, int hi) { return wrap_range<12>(lo, hi, "month"); }
std::array<bool, 24> hour_range(int lo, int hi) { return wrap_range<24>(lo, hi, "hour"); }
std::array<bool, 12> parse_months(std::string_view text) { return parse_selection<12>(text, "month"); }
std::array<bool, 24> parse_hours(std::string_view text) { return parse_selection<24>(text, "hour"); }
std::string describe_months(const std::array<bool, 12>& months) { return describe_selection(months); }
std::string describe_hours(const std::array<bool, 24>& hours) { return describe_selection(hours); }

RowFilter preset_filter(std::string_view name) {
  RowFilter f;
  if (name == "annual") return f;
  if (name == "DJF") {
    f.months = month_range(12, 2);
  } else if (name == "MAM") {
    f.months = month_range(3, 5);
  } else if (name == "JJA") {
    f.months = month_range(6, 8);
  } else if (name == "SON") {
    f.months = month_range(9, 11);
  } else if (name == "day") {
    f.hours = hour_range(7, 18);
  } else if (name == "night") {
    f.hours = hour_range(19, 6);
  } else {
    throw bad_range("unknown preset '" + std::string(name) + "'");
  }
  return f;
}

std::vector<bool> filter_mask(const ClimateFrame& frame, const RowFilter& filter) {
  const std::size_t n = frame.size();
  std::vector<bool> mask(n, false);
  const Series* secondary = filter.variable ? &frame.values(*filter.variable) : nullptr;
  for (std::size_t i = 0; i < n; ++i) {
    if (!filter.month_selected(frame.months()[i]) || !filter.hour_selected(frame.hours()[i])) continue;
    if (secondary) {
      const auto& v = (*secondary)[i];
      if (!v) continue;
      if (filter.variable_min && *v < *filter.variable_min) continue;
      if (filter.variable_max && *v > *filter.variable_max) continue;
    }
    mask[i] = true;
  }
  return mask;
}

std::array<std::optional<double>, 12> monthly_mean_t_db(const ClimateFrame& frame) {
  std::array<double, 12> sum{};
  std::array<std::size_t, 12> count{};
  const auto& t = frame.values("t_db");
  for (std::size_t i = 0; i < frame.size(); ++i) {
    if (!t[i]) continue;
    const auto m = static_cast<std::size_t>(frame.months()[i] - 1);
    sum[m] += *t[i];
    ++count[m];
  }
  std::array<std::optional<double>, 12> out{};
  for (std::size_t m = 0; m < 12; ++m) {
    if (count[m]) out[m] = sum[m] / static_cast<double>(count[m]);
  }
  return out;
}

KoppenLabel koppen_geiger(const std::array<double, 12>& t, const std::optional<std::array<double, 12>>& precipitation,
                          bool southern_hemisphere) {
  const double t_hot = *std::max_element(t.begin(), t.end());
  const double t_cold = *std::min_element(t.begin(), t.end());
  const double mat = std::accumulate(t.begin(), t.end(), 0.0) / 12.0;

  auto temperature_group = [&]() -> std::string {
    if (t_hot < 10.0) return t_hot > 0.0 ? "ET" : "EF";
    if (t_cold >= 18.0) return "A";
    return t_cold > 0.0 ? "C" : "D";
  };
  if (!precipitation) return {temperature_group(), true};

  const auto& p = *precipitation;
  const double map = std::accumulate(p.begin(), p.end(), 0.0);
  // Summer half-year: Apr-Sep north of the equator, Oct-Mar south of it.
  double p_summer = 0.0, p_winter = 0.0;
  double ps_dry = 1e300, ps_wet = -1e300, pw_dry = 1e300, pw_wet = -1e300;
  for (std::size_t m = 0; m < 12; ++m) {
    const bool north_summer = m >= 3 && m <= 8;
    const bool summer = southern_hemisphere ? !north_summer : north_summer;
    if (summer) {
      p_summer += p[m];
      ps_dry = std::min(ps_dry, p[m]);
      ps_wet = std::max(ps_wet, p[m]);
    } else {
      p_winter += p[m];
      pw_dry = std::min(pw_dry, p[m]);
      pw_wet = std::max(pw_wet, p[m]);
    }
  }
  const double p_dry = std::min(ps_dry, pw_dry);
  double threshold = 2.0 * mat + 14.0;
  if (map > 0.0 && p_winter >= 0.7 * map) {
    threshold = 2.0 * mat;
  } else if (map > 0.0 && p_summer >= 0.7 * map) {
    threshold = 2.0 * mat + 28.0;
  }

  if (map < 10.0 * threshold) return {map < 5.0 * threshold ? "BW" : "BS", false};
  if (t_hot < 10.0) return {t_hot > 0.0 ? "ET" : "EF", false};
  if (t_cold >= 18.0) {
    if (p_dry >= 60.0) return {"Af", false};
    if (p_dry >= 100.0 - map / 25.0) return {"Am", false};
    return {"Aw", false};
  }
  const std::string group = t_cold > 0.0 ? "C" : "D";
  if (ps_dry < 40.0 && ps_dry < pw_wet / 3.0) return {group + "s", false};
  if (pw_dry < ps_wet / 10.0) return {group + "w", false};
  return {group + "f", false};
}

KoppenLabel koppen_geiger(const ClimateFrame& frame) {
  const auto means = monthly_mean_t_db(frame);
  std::array<double, 12> t{};
  for (std::size_t m = 0; m < 12; ++m) {
    if (!means[m]) return {"", true};
    t[m] = *means[m];
  }
  std::optional<std::array<double, 12>> precipitation;
  if (frame.has_column("liquid_precipitation_depth")) {
    const auto& p = frame.values("liquid_precipitation_depth");
    std::array<double, 12> totals{};
    std::array<std::size_t, 12> present{};
    std::array<std::size_t, 12> rows{};
    bool any_rain = false;
    for (std::size_t i = 0; i < frame.size(); ++i) {
      const auto m = static_cast<std::size_t>(frame.months()[i] - 1);
      ++rows[m];
      if (!p[i]) continue;
      totals[m] += *p[i];
      ++present[m];
      any_rain = any_rain || *p[i] > 0.0;
    }
    bool covered = true;
    for (std::size_t m = 0; m < 12; ++m) covered = covered && rows[m] > 0 && present[m] * 5 >= rows[m] * 4;
    // Many files fill the column with zeros or mostly missing markers; both
    // would classify any climate as desert.
    if (any_rain && covered) precipitation = totals;
  }
  return koppen_geiger(t, precipitation, frame.location().latitude < 0.0);
}

SummaryReport climate_summary(const ClimateFrame& frame) {
  SummaryReport r;
  r.location = frame.location();
  r.record_count = frame.size();

  std::vector<double> temps;
  for (const auto& v : frame.values("t_db")) {
    if (v) temps.push_back(*v);
  }
  r.mean_t_db = mean_of(temps);

  const auto monthly = monthly_mean_t_db(frame);
  for (int m = 1; m <= 12; ++m) {
    const auto& v = monthly[static_cast<std::size_t>(m - 1)];
    if (!v) continue;
    if (!r.hottest_month || *v > r.hottest_month->mean) {
      r.hottest_month = MonthExtreme{m, std::string(calendar::month_name(m)), *v};
    }
    if (!r.coldest_month || *v < r.coldest_month->mean) {
      r.coldest_month = MonthExtreme{m, std::string(calendar::month_name(m)), *v};
    }
  }

  const auto& ghi = frame.values("ghi");
  const auto& dhi = frame.values("dhi");
  double sum_ghi = 0.0, sum_dhi = 0.0, paired_ghi = 0.0, paired_dhi = 0.0;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    if (ghi[i]) sum_ghi += *ghi[i];
    if (dhi[i]) sum_dhi += *dhi[i];
    if (ghi[i] && dhi[i]) {
      paired_ghi += *ghi[i];
      paired_dhi += *dhi[i];
    }
  }
  r.annual_ghi_kwh = sum_ghi / 1000.0;
  r.annual_dhi_kwh = sum_dhi / 1000.0;
  if (paired_ghi > 0.0) r.diffuse_share = paired_dhi / paired_ghi * 100.0;
  r.koppen = koppen_geiger(frame);
  return r;
}

DegreeDayTable degree_days(const ClimateFrame& frame, double base_heating, double base_cooling) {
  if (!std::isfinite(base_heating) || !std::isfinite(base_cooling)) throw bad_range("base temperatures must be finite");
  DegreeDayTable table;
  table.base_heating = base_heating;
  table.base_cooling = base_cooling;
  const auto& t = frame.values("t_db");
  const auto daily = comfort::daily_means(std::span<const std::optional<double>>(t));
  for (std::size_t d = 0; d < daily.size(); ++d) {
    if (!daily[d]) continue;
    const auto m = static_cast<std::size_t>(frame.months()[d * 24] - 1);
    table.hdd[m] += std::max(0.0, base_heating - *daily[d]);
    table.cdd[m] += std::max(0.0, *daily[d] - base_cooling);
    ++table.days_counted;
  }
  for (std::size_t m = 0; m < 12; ++m) {
    table.annual_hdd += table.hdd[m];
    table.annual_cdd += table.cdd[m];
  }
  return table;
}

NatVentResult natural_ventilation(const ClimateFrame& frame, const NatVentRequest& request) {
  if (!std::isfinite(request.t_min) || !std::isfinite(request.t_max)) throw bad_range("temperature bounds must be finite");
  if (request.t_min > request.t_max) throw bad_range("temperature range minimum exceeds maximum");
  if (request.radiant_surface_t && !std::isfinite(*request.radiant_surface_t)) {
    throw bad_range("radiant surface temperature must be finite");
  }
  NatVentResult r;
  r.request = request;
  const auto window = filter_mask(frame, request.filter);
  const auto& t = frame.values("t_db");
  const Series* t_dp = frame.has_column("t_dp") ? &frame.values("t_dp") : nullptr;
  const Series* rh = frame.has_column("rh") ? &frame.values("rh") : nullptr;
  r.mask.assign(frame.size(), false);
  for (std::size_t i = 0; i < frame.size(); ++i) {
    if (!window[i]) continue;
    const auto m = static_cast<std::size_t>(frame.months()[i] - 1);
    ++r.total_hours;
    ++r.total_by_month[m];
    if (!t[i] || *t[i] < request.t_min || *t[i] > request.t_max) continue;
    if (request.radiant_surface_t) {
      std::optional<double> dew = t_dp ? (*t_dp)[i] : std::nullopt;
      if (!dew && rh && (*rh)[i] && *(*rh)[i] > 0.0) {
        try {
          dew = thermo::dew_point(*t[i], *(*rh)[i]);
        } catch (const DomainError&) {
        }
      }
      if (!dew || !(*request.radiant_surface_t > *dew)) continue;
    }
    r.mask[i] = true;
    ++r.eligible_hours;
    ++r.eligible_by_month[m];
  }
  return r;
}

std::string_view sector_name(std::size_t sector) {
  static constexpr std::array<std::string_view, kSectorCount> kNames{
      "N", "NNE", "NE", "ENE", "E", "ESE", "SE", "SSE", "S", "SSW", "SW", "WSW", "W", "WNW", "NW", "NNW"};
  return kNames[sector % kSectorCount];
}

long long bin_floor(double value, double step) {
  auto k = static_cast<long long>(std::floor(value / step));
  if (static_cast<double>(k) * step > value) {
    --k;
  } else if (static_cast<double>(k + 1) * step <= value) {
    ++k;
  }
  return k;
}

std::size_t direction_sector(double direction) {
  double d = std::fmod(direction, 360.0);
  if (d < 0.0) d += 360.0;
  long long k = bin_floor(d + 11.25, 22.5);
  if (d < static_cast<double>(k) * 22.5 - 11.25) {
    --k;
  } else if (d >= static_cast<double>(k + 1) * 22.5 - 11.25) {
    ++k;
  }
  return static_cast<std::size_t>(((k % 16) + 16) % 16);
}

std::size_t speed_bin(double speed) {
  std::size_t k = 0;
  while (k + 1 < kSpeedBinCount && speed >= kSpeedBinEdges[k + 1]) ++k;
  return k;
}

WindRose wind_rose(const ClimateFrame& frame, const RowFilter& filter) {
  WindRose rose;
  rose.descriptor = "months=" + describe_months(filter.months) + ";hours=" + describe_hours(filter.hours);
  if (filter.variable) rose.descriptor += ";" + *filter.variable;
  const auto mask = filter_mask(frame, filter);
  const auto& dir = frame.values("wind_dir");
  const auto& speed = frame.values("wind_speed");
  for (std::size_t i = 0; i < frame.size(); ++i) {
    if (!mask[i] || !speed[i]) continue;
    if (*speed[i] < kCalmThreshold) {
      ++rose.calm_count;
      ++rose.total;
      continue;
    }
    if (!dir[i]) continue;
    ++rose.counts[direction_sector(*dir[i])][speed_bin(*speed[i])];
    ++rose.total;
  }
  if (rose.total > 0) {
    const double n = static_cast<double>(rose.total);
    rose.calm = static_cast<double>(rose.calm_count) / n * 100.0;
    for (std::size_t s = 0; s < kSectorCount; ++s) {
      for (std::size_t b = 0; b < kSpeedBinCount; ++b) {
        rose.frequency[s][b] = static_cast<double>(rose.counts[s][b]) / n * 100.0;
      }
    }
  }
  return rose;
}

PsychroData psychro_bins(const ClimateFrame& frame, const std::optional<std::string>& color_by,
                         const RowFilter& filter) {
  PsychroData out;
  out.color_by = color_by;
  const Series* color = color_by ? &frame.values(*color_by) : nullptr;
  const auto mask = filter_mask(frame, filter);
  const auto& t = frame.values("t_db");
  const auto& w = frame.values("humidity_ratio");
  std::map<std::pair<long long, long long>, std::size_t> cells;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    if (!mask[i] || !t[i] || !w[i]) continue;
    ++out.row_count;
    if (color) {
      if ((*color)[i]) out.points.push_back({*t[i], *w[i], (*color)[i], i});
    } else {
      ++cells[{bin_floor(*t[i], kPsychroTemperatureStep), bin_floor(*w[i], kPsychroHumidityStep)}];
    }
  }
  for (const auto& [key, count] : cells) out.cells.push_back({key.first, key.second, count});
  return out;
}

std::size_t uniform_bin(double value, double min, double max, std::size_t bins) {
  if (!(max > min) || bins <= 1) return 0;
  const double width = (max - min) / static_cast<double>(bins);
  const double raw = std::floor((value - min) / width);
  auto k = static_cast<long long>(std::clamp(raw, 0.0, static_cast<double>(bins - 1)));
  const auto edge = [&](long long j) { return min + static_cast<double>(j) * width; };
  if (k > 0 && value < edge(k)) --k;
  if (k + 1 < static_cast<long long>(bins) && value >= edge(k + 1)) ++k;
  return static_cast<std::size_t>(k);
}

Histogram histogram(const std::vector<double>& values, std::size_t bins) {
  Histogram h;
  h.counts.assign(bins, 0);
  if (!values.empty()) {
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    h.min = *lo;
    h.max = *hi;
  }
  const double width = (h.max - h.min) / static_cast<double>(bins);
  for (std::size_t k = 0; k < bins; ++k) h.edges.push_back(h.min + static_cast<double>(k) * width);
  h.edges.push_back(h.max);
  for (double v : values) ++h.counts[uniform_bin(v, h.min, h.max, bins)];
  return h;
}

ExplorerResult explorer_triple(const ClimateFrame& frame, const std::string& x, const std::string& y,
                               const std::string& color, const RowFilter& filter, std::size_t bins) {
  if (bins == 0) throw bad_range("explorer needs at least one bin");
  const auto& xs = frame.values(x);
  const auto& ys = frame.values(y);
  const auto& cs = frame.values(color);
  const auto mask = filter_mask(frame, filter);
  ExplorerResult r;
  r.x = x;
  r.y = y;
  r.color = color;
  r.bins = bins;
  std::vector<double> xv, yv;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    if (!mask[i] || !xs[i] || !ys[i] || !cs[i]) continue;
    r.points.push_back({*xs[i], *ys[i], *cs[i], i});
    xv.push_back(*xs[i]);
    yv.push_back(*ys[i]);
  }
  r.x_hist = histogram(xv, bins);
  r.y_hist = histogram(yv, bins);
  r.heatmap.assign(bins, std::vector<std::size_t>(bins, 0));
  for (const auto& p : r.points) {
    ++r.heatmap[uniform_bin(p.x, r.x_hist.min, r.x_hist.max, bins)][uniform_bin(p.y, r.y_hist.min, r.y_hist.max, bins)];
  }
  return r;
}

double percentile(const std::vector<double>& sorted, double p) {
  if (sorted.empty()) throw DomainError("percentile of an empty set");
  const double pos = std::clamp(p, 0.0, 1.0) * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  if (lo + 1 >= sorted.size()) return sorted.back();
  const double frac = pos - static_cast<double>(lo);
  if (frac == 0.0) return sorted[lo];
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

DescriptiveStats describe(std::vector<double> values) {
  DescriptiveStats s;
  s.count = values.size();
  if (values.empty()) return s;
  std::sort(values.begin(), values.end());
  const double n = static_cast<double>(values.size());
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  s.mean = mean;
  s.std = std::sqrt(ss / n);
  s.min = values.front();
  s.max = values.back();
  s.p25 = percentile(values, 0.25);
  s.median = percentile(values, 0.5);
  s.p75 = percentile(values, 0.75);
  return s;
}

MonthlyStatistics monthly_statistics(const ClimateFrame& frame, const std::string& column) {
  const auto& col = frame.column(column);
  MonthlyStatistics out;
  out.column = column;
  out.unit = col.unit;
  std::array<std::vector<double>, 12> by_month;
  std::vector<double> all;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    if (!col.values[i]) continue;
    by_month[static_cast<std::size_t>(frame.months()[i] - 1)].push_back(*col.values[i]);
    all.push_back(*col.values[i]);
  }
  for (std::size_t m = 0; m < 12; ++m) out.months[m] = describe(std::move(by_month[m]));
  out.annual = describe(std::move(all));
  return out;
}

UtciDistribution utci_distribution(const ClimateFrame& frame, std::string_view scenario, const RowFilter& filter) {
  bool known = false;
  for (const auto& s : comfort::kScenarios) known = known || comfort::scenario_key(s) == scenario;
  if (!known) throw BadRequest("UnknownScenario", "unknown UTCI scenario '" + std::string(scenario) + "'");
  UtciDistribution out;
  out.scenario = std::string(scenario);
  const auto& cat = frame.values("utci_" + out.scenario + "_category");
  const auto mask = filter_mask(frame, filter);
  for (std::size_t i = 0; i < frame.size(); ++i) {
    if (!mask[i] || !cat[i]) continue;
    const auto c = static_cast<std::size_t>(*cat[i]);
    ++out.monthly[static_cast<std::size_t>(frame.months()[i] - 1)][c];
    ++out.annual[c];
    ++out.hours;
  }
  return out;
}

}  // namespace clima::analytics
