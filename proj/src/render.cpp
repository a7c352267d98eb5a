#include "clima/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "clima/calendar.hpp"
#include "clima/comfort.hpp"
#include "clima/error.hpp"
#include "clima/numfmt.hpp"
#include "clima/solar.hpp"
#include "clima/thermo.hpp"
#include "clima/version.hpp"
#include "svg.hpp"

namespace clima::render {

using analytics::ClimateFrame;
using analytics::Series;
using svg::num;

namespace {

// ---------------------------------------------------------------- colours

struct Rgb {
  int r, g, b;
};

Rgb hex_to_rgb(std::string_view hex) {
  auto nib = [](char c) { return c <= '9' ? c - '0' : c - 'a' + 10; };
  return {nib(hex[1]) * 16 + nib(hex[2]), nib(hex[3]) * 16 + nib(hex[4]), nib(hex[5]) * 16 + nib(hex[6])};
}

std::string rgb_to_hex(Rgb c) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c.r, c.g, c.b);
  return buf;
}

constexpr std::array<std::string_view, 10> kSequential{"#440154", "#482878", "#3e4989", "#31688e", "#26828e",
                                                       "#1f9e89", "#35b779", "#6ece58", "#b5de2b", "#fde725"};
constexpr std::array<std::string_view, 11> kDiverging{"#053061", "#2166ac", "#4393c3", "#92c5de",
                                                      "#d1e5f0", "#f7f7f7", "#fddbc7", "#f4a582",
                                                      "#d6604d", "#b2182b", "#67001f"};
constexpr std::array<std::string_view, 10> kUtciColors{"#053061", "#2166ac", "#4393c3", "#92c5de", "#d1e5f0",
                                                       "#1a9850", "#fdae61", "#f46d43", "#d73027", "#a50026"};
constexpr std::array<std::string_view, 6> kSpeedColors{"#d1e5f0", "#92c5de", "#4393c3", "#2166ac", "#35b779", "#fde725"};
constexpr std::string_view kMissingFill = "#d9d9d9";

template <std::size_t N>
std::string ramp(const std::array<std::string_view, N>& stops, double t) {
  t = std::clamp(std::isfinite(t) ? t : 0.0, 0.0, 1.0);
  const double pos = t * static_cast<double>(N - 1);
  const auto i = std::min(static_cast<std::size_t>(pos), N - 2);
  const double f = pos - static_cast<double>(i);
  const Rgb a = hex_to_rgb(stops[i]);
  const Rgb b = hex_to_rgb(stops[i + 1]);
  auto mix = [f](int x, int y) { return static_cast<int>(std::lround(x + (y - x) * f)); };
  return rgb_to_hex({mix(a.r, b.r), mix(a.g, b.g), mix(a.b, b.b)});
}

enum class ScaleKind { Sequential, Diverging, Categorical };

struct ColorScale {
  ScaleKind kind = ScaleKind::Sequential;
  AxisRange range;
  std::string variable;

  [[nodiscard]] std::string operator()(double v) const {
    switch (kind) {
      case ScaleKind::Categorical: {
        const auto idx = static_cast<std::size_t>(std::clamp(std::lround(v), 0L, 9L));
        return std::string(kUtciColors[idx]);
      }
      case ScaleKind::Diverging: {
        const double half = std::max(std::abs(range.min), std::abs(range.max));
        return ramp(kDiverging, 0.5 + 0.5 * v / half);
      }
      case ScaleKind::Sequential:
        break;
    }
    const double span = range.max - range.min;
    return ramp(kSequential, span > 0.0 ? (v - range.min) / span : 0.5);
  }
};

bool is_category_column(std::string_view name) {
  return name.size() > 9 && name.substr(name.size() - 9) == "_category";
}

ColorScale make_scale(const ClimateFrame& frame, const std::string& variable, RangeMode mode) {
  ColorScale s;
  s.variable = variable;
  s.range = axis_range(variable, mode, frame);
  if (is_category_column(variable)) {
    s.kind = ScaleKind::Categorical;
    s.range = {0.0, 9.0};
  } else if (frame.column(variable).unit == "C" && s.range.min < 0.0 && s.range.max > 0.0) {
    s.kind = ScaleKind::Diverging;
  }
  return s;
}

// ----------------------------------------------------------------- layout

struct Box {
  double x0, y0, x1, y1;
};

struct Linear {
  double d0, d1, p0, p1;
  double operator()(double v) const { return d1 == d0 ? p0 : p0 + (v - d0) / (d1 - d0) * (p1 - p0); }
};

AxisTransform transform_of(const Linear& s) { return {{s.d0, s.d1}, s.p0, s.p1}; }

Box plot_box(const ChartRequest& r, double right_reserve = 130.0) {
  return {70.0, 50.0, r.width - right_reserve, r.height - 55.0};
}

double tick_step(double span) {
  const double raw = span / 6.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 2.5, 5.0}) {
    if (m * mag >= raw) return m * mag;
  }
  return 10.0 * mag;
}

std::vector<double> ticks(const AxisRange& r) {
  std::vector<double> out;
  const double span = r.max - r.min;
  if (!(span > 0.0)) return {r.min};
  const double step = tick_step(span);
  const double first = std::ceil(r.min / step - 1e-9);
  for (int k = 0; k < 100; ++k) {
    const double v = (first + k) * step;
    if (v > r.max + step * 1e-9) break;
    out.push_back(std::abs(v) < step * 1e-9 ? 0.0 : v);
  }
  return out;
}

std::string label_of(const ClimateFrame& frame, const std::string& variable) {
  const auto& unit = frame.column(variable).unit;
  return unit.empty() ? variable : variable + " [" + unit + "]";
}

void draw_frame(svg::Writer& w, const Box& b) {
  w.rect(b.x0, b.y0, b.x1 - b.x0, b.y1 - b.y0, "none", "frame", "stroke=\"#333333\" stroke-width=\"1\"");
}

void x_ticks(svg::Writer& w, const Box& b, const Linear& xs, const AxisRange& r) {
  w.open_group("x-axis");
  for (double t : ticks(r)) {
    const double x = xs(t);
    w.line(x, b.y1, x, b.y1 + 5.0, "#333333");
    w.text(x, b.y1 + 17.0, format_sig(t, 6), "middle", 10.0);
  }
  w.close_group();
}

void y_ticks(svg::Writer& w, const Box& b, const Linear& ys, const AxisRange& r) {
  w.open_group("y-axis");
  for (double t : ticks(r)) {
    const double y = ys(t);
    w.line(b.x0 - 5.0, y, b.x0, y, "#333333");
    w.line(b.x0, y, b.x1, y, "#eeeeee", 0.5, "grid");
    w.text(b.x0 - 8.0, y + 3.5, format_sig(t, 6), "end", 10.0);
  }
  w.close_group();
}

void month_ticks(svg::Writer& w, const Box& b, const Linear& xs, bool leap) {
  w.open_group("x-axis");
  for (int m = 1; m <= 12; ++m) {
    const double start = calendar::day_of_year(m, 1, leap);
    const double x = xs(start);
    w.line(x, b.y1, x, b.y1 + 5.0, "#333333");
    const double next = m < 12 ? calendar::day_of_year(m + 1, 1, leap) : (leap ? 367.0 : 366.0);
    w.text(xs((start + next) / 2.0), b.y1 + 17.0, calendar::month_abbrev(m), "middle", 10.0);
  }
  w.close_group();
}

void axis_titles(svg::Writer& w, const Box& b, std::string_view x_title, std::string_view y_title) {
  if (!x_title.empty()) w.text((b.x0 + b.x1) / 2.0, b.y1 + 38.0, x_title, "middle", 11.0, "axis-title");
  if (!y_title.empty()) {
    const double cx = b.x0 - 48.0;
    const double cy = (b.y0 + b.y1) / 2.0;
    w.text(cx, cy, y_title, "middle", 11.0, "axis-title", "rotate(-90 " + num(cx) + " " + num(cy) + ")");
  }
}

void color_legend(svg::Writer& w, const ColorScale& scale, const ChartRequest& req, std::string_view title) {
  const double x = req.width - 95.0;
  const double top = 60.0;
  const double bottom = req.height - 70.0;
  w.open_group("legend");
  w.text(x, top - 12.0, title, "start", 10.0);
  if (scale.kind == ScaleKind::Categorical) {
    const double h = (bottom - top) / 10.0;
    for (int c = 9; c >= 0; --c) {
      const double y = top + (9 - c) * h;
      w.rect(x, y, 14.0, h - 2.0, kUtciColors[static_cast<std::size_t>(c)]);
      w.text(x + 18.0, y + h / 2.0 + 3.0, comfort::to_string(static_cast<comfort::StressCategory>(c)), "start", 7.0);
    }
  } else {
    constexpr int kSteps = 40;
    const double h = (bottom - top) / kSteps;
    const double span = scale.range.max - scale.range.min;
    for (int k = 0; k < kSteps; ++k) {
      const double v = scale.range.max - (k + 0.5) / kSteps * span;
      w.rect(x, top + k * h, 16.0, h + 0.2, scale(v));
    }
    const Linear ys{scale.range.min, scale.range.max, bottom, top};
    for (double t : ticks(scale.range)) w.text(x + 20.0, ys(t) + 3.5, format_sig(t, 6), "start", 9.0);
  }
  w.close_group();
}

std::string plot_group_attributes(const std::optional<AxisTransform>& x, const std::optional<AxisTransform>& y) {
  std::string out;
  auto add = [&out](std::string_view axis, const AxisTransform& t) {
    if (!out.empty()) out += ' ';
    out += "data-" + std::string(axis) + "-domain=\"" + num(t.domain.min) + " " + num(t.domain.max) + "\" data-" +
           std::string(axis) + "-pixels=\"" + num(t.pixel_start) + " " + num(t.pixel_end) + "\"";
  };
  if (x) add("x", *x);
  if (y) add("y", *y);
  return out;
}

void clip_rect(svg::Writer& w, const Box& b) {
  w.raw("<defs><clipPath id=\"plot-area\"><rect x=\"" + num(b.x0) + "\" y=\"" + num(b.y0) + "\" width=\"" +
        num(b.x1 - b.x0) + "\" height=\"" + num(b.y1 - b.y0) + "\"/></clipPath></defs>\n");
}

struct Context {
  const ClimateFrame& frame;
  const ChartRequest& req;
  std::vector<bool> mask;
  svg::Writer w;
  SvgDocument doc;
  std::string title;
};

bool leap_frame(const ClimateFrame& f) {
  return std::any_of(f.days_of_year().begin(), f.days_of_year().end(), [](int d) { return d == 366; });
}

int day_count(const ClimateFrame& f) {
  int n = 0;
  for (int d : f.days_of_year()) n = std::max(n, d);
  return std::max(n, 365);
}

[[noreturn]] void incompatible(const std::string& message) { throw BadRequest("IncompatibleRequest", message); }

// ----------------------------------------------------------------- charts

void heatmap(Context& c) {
  const auto& var = c.req.variable;
  const auto& values = c.frame.values(var);
  const auto scale = make_scale(c.frame, var, c.req.range_mode);
  const Box b = plot_box(c.req);
  const int days = day_count(c.frame);
  const Linear xs{1.0, days + 1.0, b.x0, b.x1};
  const Linear ys{0.0, 24.0, b.y1, b.y0};
  c.doc.x_axis = transform_of(xs);
  c.doc.y_axis = transform_of(ys);
  c.doc.color_range = scale.range;
  c.title = "Heatmap of " + var;

  c.w.open_group("plot", plot_group_attributes(c.doc.x_axis, c.doc.y_axis));
  c.w.open_group("cells", "shape-rendering=\"crispEdges\"");
  for (std::size_t i = 0; i < c.frame.size(); ++i) {
    if (!c.mask[i]) continue;
    const double doy = c.frame.days_of_year()[i];
    const double hour = c.frame.hours()[i];
    const double x0 = xs(doy);
    const double y0 = ys(hour);
    c.w.rect(x0, y0, xs(doy + 1.0) - x0, ys(hour - 1.0) - y0, values[i] ? scale(*values[i]) : std::string(kMissingFill),
             "cell");
    ++c.doc.point_count;
  }
  c.w.close_group();
  c.w.close_group();
  draw_frame(c.w, b);
  month_ticks(c.w, b, xs, leap_frame(c.frame));
  y_ticks(c.w, b, ys, {0.0, 24.0});
  axis_titles(c.w, b, "Day of year", "Hour of day");
  color_legend(c.w, scale, c.req, label_of(c.frame, var));
}

struct DailyAggregate {
  std::vector<int> doy;
  std::vector<double> min, max, mean;
};

DailyAggregate aggregate_days(const ClimateFrame& f, const Series& values, const std::vector<bool>& mask) {
  const int days = day_count(f);
  std::vector<double> lo(static_cast<std::size_t>(days + 1), 0.0), hi(lo), sum(lo);
  std::vector<int> n(static_cast<std::size_t>(days + 1), 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!mask[i] || !values[i]) continue;
    const auto d = static_cast<std::size_t>(f.days_of_year()[i]);
    const double v = *values[i];
    if (n[d] == 0) {
      lo[d] = hi[d] = v;
    } else {
      lo[d] = std::min(lo[d], v);
      hi[d] = std::max(hi[d], v);
    }
    sum[d] += v;
    ++n[d];
  }
  DailyAggregate a;
  for (int d = 1; d <= days; ++d) {
    const auto k = static_cast<std::size_t>(d);
    if (n[k] == 0) continue;
    a.doy.push_back(d);
    a.min.push_back(lo[k]);
    a.max.push_back(hi[k]);
    a.mean.push_back(sum[k] / n[k]);
  }
  return a;
}

void band_runs(svg::Writer& w, const ClimateFrame& f, const Linear& xs, const Linear& ys, const std::string& lower,
               const std::string& upper, std::string_view fill, double opacity, std::string_view cls) {
  if (!f.has_column(lower) || !f.has_column(upper)) return;
  const auto& lo = f.values(lower);
  const auto& hi = f.values(upper);
  svg::Points top, bottom;
  int last_doy = -1;
  auto flush = [&] {
    if (top.size() >= 2) {
      svg::Points poly = top;
      poly.insert(poly.end(), bottom.rbegin(), bottom.rend());
      w.polygon(poly, fill, opacity, cls);
    }
    top.clear();
    bottom.clear();
  };
  for (std::size_t i = 0; i < f.size(); ++i) {
    const int doy = f.days_of_year()[i];
    if (doy == last_doy) continue;
    if (!lo[i] || !hi[i]) {
      flush();
      last_doy = doy;
      continue;
    }
    if (last_doy >= 0 && doy != last_doy + 1) flush();
    last_doy = doy;
    top.emplace_back(xs(doy + 0.5), ys(*hi[i]));
    bottom.emplace_back(xs(doy + 0.5), ys(*lo[i]));
  }
  flush();
}

void yearly_range(Context& c) {
  const auto& var = c.req.variable;
  const auto& values = c.frame.values(var);
  const auto yr = axis_range(var, c.req.range_mode, c.frame);
  const Box b = plot_box(c.req);
  const int days = day_count(c.frame);
  const Linear xs{1.0, days + 1.0, b.x0, b.x1};
  const Linear ys{yr.min, yr.max, b.y1, b.y0};
  c.doc.x_axis = transform_of(xs);
  c.doc.y_axis = transform_of(ys);
  c.title = "Daily range of " + var;

  const auto agg = aggregate_days(c.frame, values, c.mask);
  y_ticks(c.w, b, ys, yr);
  clip_rect(c.w, b);
  c.w.open_group("plot", plot_group_attributes(c.doc.x_axis, c.doc.y_axis) + " clip-path=\"url(#plot-area)\"");
  if (var == "t_db") {
    band_runs(c.w, c.frame, xs, ys, "adaptive_80_lower", "adaptive_80_upper", "#1a9850", 0.18, "adaptive-80");
    band_runs(c.w, c.frame, xs, ys, "adaptive_90_lower", "adaptive_90_upper", "#1a9850", 0.25, "adaptive-90");
  }
  svg::Points envelope, mean;
  for (std::size_t k = 0; k < agg.doy.size(); ++k) envelope.emplace_back(xs(agg.doy[k] + 0.5), ys(agg.max[k]));
  for (std::size_t k = agg.doy.size(); k-- > 0;) envelope.emplace_back(xs(agg.doy[k] + 0.5), ys(agg.min[k]));
  for (std::size_t k = 0; k < agg.doy.size(); ++k) mean.emplace_back(xs(agg.doy[k] + 0.5), ys(agg.mean[k]));
  c.w.polygon(envelope, "#f4a582", 0.7, "daily-range");
  c.w.polyline(mean, "#b2182b", 1.2, "daily-mean");
  c.doc.point_count = agg.doy.size();
  c.w.close_group();
  draw_frame(c.w, b);
  month_ticks(c.w, b, xs, leap_frame(c.frame));
  axis_titles(c.w, b, "Day of year", label_of(c.frame, var));
  c.w.open_group("legend");
  const double lx = c.req.width - 120.0;
  c.w.rect(lx, 60.0, 14.0, 10.0, "#f4a582");
  c.w.text(lx + 18.0, 69.0, "daily min-max", "start", 9.0);
  c.w.line(lx, 85.0, lx + 14.0, 85.0, "#b2182b", 1.5);
  c.w.text(lx + 18.0, 88.0, "daily mean", "start", 9.0);
  if (var == "t_db") {
    c.w.rect(lx, 98.0, 14.0, 10.0, "#1a9850", "", "fill-opacity=\"0.3\"");
    c.w.text(lx + 18.0, 107.0, "adaptive 80%/90%", "start", 9.0);
  }
  c.w.close_group();
}

// Twelve small multiples in a 4 x 3 grid.
std::array<Box, 12> month_panels(const ChartRequest& r) {
  std::array<Box, 12> out{};
  const double left = 70.0, top = 45.0, right = r.width - 20.0, bottom = r.height - 40.0;
  const double gap_x = 18.0, gap_y = 30.0;
  const double pw = (right - left - 3 * gap_x) / 4.0;
  const double ph = (bottom - top - 2 * gap_y) / 3.0;
  for (int m = 0; m < 12; ++m) {
    const double x0 = left + (m % 4) * (pw + gap_x);
    const double y0 = top + (m / 4) * (ph + gap_y);
    out[static_cast<std::size_t>(m)] = {x0, y0, x0 + pw, y0 + ph};
  }
  return out;
}

void panel_axes(svg::Writer& w, const Box& b, const Linear& ys, const AxisRange& yr, int month, bool first_column) {
  draw_frame(w, b);
  w.text((b.x0 + b.x1) / 2.0, b.y0 - 5.0, calendar::month_name(month), "middle", 10.0, "panel-title");
  for (double t : ticks(yr)) {
    const double y = ys(t);
    w.line(b.x0, y, b.x1, y, "#eeeeee", 0.5, "grid");
    if (first_column) w.text(b.x0 - 5.0, y + 3.0, format_sig(t, 6), "end", 8.0);
  }
  const Linear xs{0.0, 24.0, b.x0, b.x1};
  for (int h = 0; h <= 24; h += 6) w.text(xs(h), b.y1 + 11.0, std::to_string(h), "middle", 8.0);
}

void daily_profiles(Context& c) {
  const auto& var = c.req.variable;
  const auto& values = c.frame.values(var);
  const auto yr = axis_range(var, c.req.range_mode, c.frame);
  const auto panels = month_panels(c.req);
  c.title = "Daily profiles of " + var + " by month";
  const Linear first_x{0.0, 24.0, panels[0].x0, panels[0].x1};
  const Linear first_y{yr.min, yr.max, panels[0].y1, panels[0].y0};
  c.doc.x_axis = transform_of(first_x);
  c.doc.y_axis = transform_of(first_y);

  c.w.raw("<defs>");
  for (int m = 0; m < 12; ++m) {
    const auto& b = panels[static_cast<std::size_t>(m)];
    c.w.raw("<clipPath id=\"panel-" + std::to_string(m + 1) + "\"><rect x=\"" + num(b.x0) + "\" y=\"" + num(b.y0) +
            "\" width=\"" + num(b.x1 - b.x0) + "\" height=\"" + num(b.y1 - b.y0) + "\"/></clipPath>");
  }
  c.w.raw("</defs>\n");

  for (int m = 1; m <= 12; ++m) {
    const auto& b = panels[static_cast<std::size_t>(m - 1)];
    const Linear xs{0.0, 24.0, b.x0, b.x1};
    const Linear ys{yr.min, yr.max, b.y1, b.y0};
    panel_axes(c.w, b, ys, yr, m, (m - 1) % 4 == 0);
    c.w.open_group("panel", "data-month=\"" + std::to_string(m) + "\" " +
                                plot_group_attributes(transform_of(xs), transform_of(ys)) + " clip-path=\"url(#panel-" +
                                std::to_string(m) + ")\"");
    std::array<double, 24> sum{};
    std::array<int, 24> n{};
    svg::Points trace;
    int trace_doy = -1;
    auto flush = [&] {
      if (trace.size() >= 2) {
        c.w.polyline(trace, "#92c5de", 0.5, "trace");
        ++c.doc.point_count;
      }
      trace.clear();
    };
    for (std::size_t i = 0; i < c.frame.size(); ++i) {
      if (c.frame.months()[i] != m) continue;
      const int doy = c.frame.days_of_year()[i];
      if (doy != trace_doy) {
        flush();
        trace_doy = doy;
      }
      if (!c.mask[i] || !values[i]) {
        flush();
        continue;
      }
      const int h = c.frame.hours()[i];
      trace.emplace_back(xs(h - 0.5), ys(*values[i]));
      sum[static_cast<std::size_t>(h - 1)] += *values[i];
      ++n[static_cast<std::size_t>(h - 1)];
    }
    flush();
    svg::Points mean;
    for (int h = 1; h <= 24; ++h) {
      const auto k = static_cast<std::size_t>(h - 1);
      if (n[k] > 0) mean.emplace_back(xs(h - 0.5), ys(sum[k] / n[k]));
    }
    c.w.polyline(mean, "#b2182b", 1.5, "monthly-mean");
    c.w.close_group();
  }
  c.w.text(c.req.width / 2.0, c.req.height - 10.0, "Hour of day", "middle", 11.0, "axis-title");
  const double cy = c.req.height / 2.0;
  c.w.text(18.0, cy, label_of(c.frame, var), "middle", 11.0, "axis-title", "rotate(-90 18 " + num(cy) + ")");
}

std::string annular_sector(double cx, double cy, double r0, double r1, double a0_deg, double a1_deg) {
  auto pt = [&](double r, double a) {
    const double rad = a * std::numbers::pi / 180.0;
    return num(cx + r * std::sin(rad)) + " " + num(cy - r * std::cos(rad));
  };
  std::string d = "M" + pt(r1, a0_deg) + " A" + num(r1) + " " + num(r1) + " 0 0 1 " + pt(r1, a1_deg) + " L" +
                  pt(r0, a1_deg);
  if (r0 > 0.0) {
    d += " A" + num(r0) + " " + num(r0) + " 0 0 0 " + pt(r0, a0_deg);
  } else {
    d += " L" + pt(0.0, a0_deg);
  }
  return d + " Z";
}

void wind_rose(Context& c) {
  if (c.req.variable != "wind_speed") incompatible("wind rose needs the wind_speed variable, not " + c.req.variable);
  const auto rose = analytics::wind_rose(c.frame, c.req.filter);
  double max_total = 0.0;
  for (const auto& sector : rose.frequency) {
    double t = 0.0;
    for (double f : sector) t += f;
    max_total = std::max(max_total, t);
  }
  AxisRange rr{0.0, 25.0};
  if (c.req.range_mode == RangeMode::Global) {
    if (auto g = global_range("wind_rose_percent")) rr = *g;
  } else {
    rr = {0.0, max_total > 0.0 ? nice_local_range(0.0, max_total).max : 1.0};
  }
  const double cx = (c.req.width - 140.0) / 2.0 + 20.0;
  const double cy = c.req.height / 2.0 + 10.0;
  const double radius = std::min(c.req.width - 180.0, c.req.height - 90.0) / 2.0;
  const Linear rs{rr.min, rr.max, 0.0, radius};
  c.doc.x_axis = transform_of(rs);
  c.title = "Wind rose (" + rose.descriptor + ")";

  c.w.open_group("grid");
  for (double t : ticks(rr)) {
    if (t <= 0.0) continue;
    c.w.raw("<circle class=\"ring\" cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" r=\"" + num(rs(t)) +
            "\" fill=\"none\" stroke=\"#dddddd\"/>\n");
    c.w.text(cx + 3.0, cy - rs(t) - 2.0, format_sig(t, 6) + "%", "start", 8.0);
  }
  for (std::size_t s = 0; s < analytics::kSectorCount; ++s) {
    const double a = s * 22.5 * std::numbers::pi / 180.0;
    c.w.line(cx, cy, cx + radius * std::sin(a), cy - radius * std::cos(a), "#eeeeee", 0.5);
    if (s % 2 == 0) {
      c.w.text(cx + (radius + 14.0) * std::sin(a), cy - (radius + 14.0) * std::cos(a) + 4.0,
               analytics::sector_name(s), "middle", 10.0);
    }
  }
  c.w.close_group();

  c.w.open_group("plot", plot_group_attributes(c.doc.x_axis, std::nullopt));
  for (std::size_t s = 0; s < analytics::kSectorCount; ++s) {
    double inner = 0.0;
    const double a0 = s * 22.5 - 10.125;
    const double a1 = s * 22.5 + 10.125;
    for (std::size_t k = 0; k < analytics::kSpeedBinCount; ++k) {
      const double f = rose.frequency[s][k];
      if (rose.counts[s][k] == 0) continue;
      const double outer = inner + f;
      c.w.raw("<path class=\"wedge\" data-sector=\"" + std::string(analytics::sector_name(s)) + "\" data-bin=\"" +
              std::to_string(k) + "\" d=\"" + annular_sector(cx, cy, rs(inner), rs(outer), a0, a1) + "\" fill=\"" +
              std::string(kSpeedColors[k]) + "\" stroke=\"#ffffff\" stroke-width=\"0.5\"/>\n");
      ++c.doc.point_count;
      inner = outer;
    }
  }
  c.w.close_group();

  c.w.open_group("legend");
  const double lx = c.req.width - 120.0;
  c.w.text(lx, 50.0, "wind speed [m/s]", "start", 10.0);
  for (std::size_t k = 0; k < analytics::kSpeedBinCount; ++k) {
    const double y = 60.0 + k * 16.0;
    c.w.rect(lx, y, 14.0, 12.0, kSpeedColors[k]);
    std::string label = format_sig(analytics::kSpeedBinEdges[k], 6) +
                        (k + 1 < analytics::kSpeedBinCount ? "-" + format_sig(analytics::kSpeedBinEdges[k + 1], 6)
                                                           : std::string("+"));
    c.w.text(lx + 18.0, y + 10.0, label, "start", 9.0);
  }
  c.w.text(lx, 170.0, "calm " + format_sig(rose.calm, 4) + "%", "start", 10.0, "calm");
  c.w.text(lx, 186.0, "hours " + std::to_string(rose.total), "start", 10.0);
  c.w.close_group();
}

double frame_pressure(const ClimateFrame& f) {
  if (f.has_column("station_pressure")) {
    double sum = 0.0;
    std::size_t n = 0;
    for (const auto& v : f.values("station_pressure")) {
      if (v) {
        sum += *v;
        ++n;
      }
    }
    if (n > 0) return sum / static_cast<double>(n);
  }
  return thermo::pressure_at_elevation(f.location().elevation);
}

void psychrometric(Context& c) {
  if (c.req.variable != "t_db") incompatible("psychrometric chart plots t_db against humidity_ratio");
  const auto xr = axis_range("t_db", c.req.range_mode, c.frame);
  const auto yr = axis_range("humidity_ratio", c.req.range_mode, c.frame);
  const double right_reserve = 130.0;
  const Box b = plot_box(c.req, right_reserve);
  const Linear xs{xr.min, xr.max, b.x0, b.x1};
  const Linear ys{yr.min, yr.max, b.y1, b.y0};
  c.doc.x_axis = transform_of(xs);
  c.doc.y_axis = transform_of(ys);
  c.title = "Psychrometric chart";
  const double p = frame_pressure(c.frame);

  y_ticks(c.w, b, ys, yr);
  clip_rect(c.w, b);
  c.w.open_group("plot", plot_group_attributes(c.doc.x_axis, c.doc.y_axis) + " clip-path=\"url(#plot-area)\"");
  // Saturation curve and relative-humidity iso-lines at the station pressure.
  constexpr int kCurveSteps = 180;
  const double t_lo = std::max(xr.min, -60.0);
  const double t_hi = std::min(xr.max, 90.0);
  for (int rh = 100; rh >= 10; rh -= 10) {
    svg::Points pts;
    for (int k = 0; k <= kCurveSteps; ++k) {
      const double t = t_lo + (t_hi - t_lo) * k / kCurveSteps;
      double w = 0.0;
      try {
        w = thermo::humidity_ratio(t, rh, p);
      } catch (const DomainError&) {
        continue;
      }
      pts.emplace_back(xs(t), ys(std::min(w, yr.max + (yr.max - yr.min))));
      if (w > yr.max) break;
    }
    if (rh == 100) {
      c.w.polyline(pts, "#333333", 1.5, "saturation");
    } else {
      c.w.polyline(pts, "#aaaaaa", 0.6, "rh-line", "3,3");
    }
  }

  std::optional<ColorScale> scale;
  if (c.req.color_variable) {
    scale = make_scale(c.frame, *c.req.color_variable, c.req.range_mode);
    const auto data = analytics::psychro_bins(c.frame, c.req.color_variable, c.req.filter);
    c.w.open_group("points");
    for (const auto& pt : data.points) {
      c.w.circle(xs(pt.t_db), ys(pt.humidity_ratio), 1.6, (*scale)(*pt.color), "point");
    }
    c.w.close_group();
    c.doc.point_count = data.points.size();
    c.doc.color_range = scale->range;
  } else {
    const auto data = analytics::psychro_bins(c.frame, std::nullopt, c.req.filter);
    std::size_t max_count = 0;
    for (const auto& cell : data.cells) max_count = std::max(max_count, cell.count);
    scale = ColorScale{ScaleKind::Sequential, {0.0, static_cast<double>(std::max<std::size_t>(max_count, 1))}, "hours"};
    c.w.open_group("bins");
    for (const auto& cell : data.cells) {
      const double t0 = static_cast<double>(cell.t_bin) * analytics::kPsychroTemperatureStep;
      const double w0 = static_cast<double>(cell.w_bin) * analytics::kPsychroHumidityStep;
      const double x0 = xs(t0);
      const double y1 = ys(w0 + analytics::kPsychroHumidityStep);
      c.w.rect(x0, y1, xs(t0 + analytics::kPsychroTemperatureStep) - x0, ys(w0) - y1,
               (*scale)(static_cast<double>(cell.count)), "bin",
               "data-count=\"" + std::to_string(cell.count) + "\"");
    }
    c.w.close_group();
    c.doc.point_count = data.cells.size();
    c.doc.color_range = scale->range;
  }
  c.w.close_group();
  draw_frame(c.w, b);
  x_ticks(c.w, b, xs, xr);
  axis_titles(c.w, b, "t_db [C]", "humidity_ratio [kg/kg]");
  color_legend(c.w, *scale,
               c.req,
               c.req.color_variable ? label_of(c.frame, *c.req.color_variable) : std::string("hours per bin"));
}

void sun_path(Context& c, solar::Projection projection) {
  if (c.req.variable != "solar_altitude") incompatible("sun path charts take no variable other than solar_altitude");
  const auto& alt = c.frame.values("solar_altitude");
  const auto& az = c.frame.values("solar_azimuth");
  std::optional<ColorScale> scale;
  const Series* color = nullptr;
  if (c.req.color_variable) {
    scale = make_scale(c.frame, *c.req.color_variable, c.req.range_mode);
    color = &c.frame.values(*c.req.color_variable);
    c.doc.color_range = scale->range;
  }
  const auto& loc = c.frame.location();
  const int year = c.frame.reference_year();

  // Reference arcs on the 21st of each month, sampled every 10 minutes.
  std::vector<std::vector<solar::SolarPosition>> arcs;
  for (int m = 1; m <= 12; ++m) {
    std::vector<solar::SolarPosition> arc;
    for (int k = 0; k <= 144; ++k) arc.push_back(solar::solar_position_at(loc, year, m, 21, k / 6.0));
    arcs.push_back(std::move(arc));
  }

  if (projection == solar::Projection::Spherical) {
    c.title = "Spherical sun path";
    const double cx = (c.req.width - 140.0) / 2.0 + 20.0;
    const double cy = c.req.height / 2.0 + 5.0;
    const double radius = std::min(c.req.width - 180.0, c.req.height - 80.0) / 2.0;
    const Linear rs{0.0, 90.0, 0.0, radius};
    c.doc.x_axis = transform_of(rs);
    auto place = [&](double altitude, double azimuth) {
      const double r = rs(90.0 - altitude);
      const double a = azimuth * std::numbers::pi / 180.0;
      return std::pair{cx + r * std::sin(a), cy - r * std::cos(a)};
    };
    c.w.open_group("grid");
    for (int a = 0; a < 90; a += 15) {
      c.w.raw("<circle class=\"altitude-ring\" cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" r=\"" +
              num(rs(90.0 - a)) + "\" fill=\"none\" stroke=\"" + (a == 0 ? "#333333" : "#dddddd") + "\"/>\n");
    }
    for (int deg = 0; deg < 360; deg += 30) {
      const auto [x, y] = place(0.0, deg);
      c.w.line(cx, cy, x, y, "#eeeeee", 0.5);
      const auto [lx, ly] = place(-8.0, deg);
      static constexpr std::array<std::string_view, 4> kCardinal{"N", "E", "S", "W"};
      c.w.text(lx, ly + 4.0, deg % 90 == 0 ? std::string(kCardinal[static_cast<std::size_t>(deg / 90)])
                                            : std::to_string(deg),
               "middle", 9.0);
    }
    c.w.close_group();
    c.w.open_group("plot", plot_group_attributes(c.doc.x_axis, std::nullopt));
    for (const auto& arc : arcs) {
      svg::Points pts;
      for (const auto& p : arc) {
        if (p.altitude > 0.0) {
          const auto [x, y] = place(p.altitude, p.azimuth);
          pts.emplace_back(x, y);
        } else if (!pts.empty()) {
          c.w.polyline(pts, "#999999", 0.6, "day-arc");
          pts.clear();
        }
      }
      c.w.polyline(pts, "#999999", 0.6, "day-arc");
    }
    c.w.open_group("points");
    for (std::size_t i = 0; i < c.frame.size(); ++i) {
      if (!c.mask[i] || !alt[i] || !az[i] || *alt[i] <= 0.0) continue;
      if (color && !(*color)[i]) continue;
      const auto [x, y] = place(*alt[i], *az[i]);
      c.w.circle(x, y, 1.8, color ? (*scale)(*(*color)[i]) : std::string("#f4a582"), "point");
      ++c.doc.point_count;
    }
    c.w.close_group();
    c.w.close_group();
  } else {
    c.title = "Cartesian sun path";
    const Box b = plot_box(c.req);
    const Linear xs{0.0, 360.0, b.x0, b.x1};
    const Linear ys{0.0, 90.0, b.y1, b.y0};
    c.doc.x_axis = transform_of(xs);
    c.doc.y_axis = transform_of(ys);
    y_ticks(c.w, b, ys, {0.0, 90.0});
    clip_rect(c.w, b);
    c.w.open_group("plot", plot_group_attributes(c.doc.x_axis, c.doc.y_axis) + " clip-path=\"url(#plot-area)\"");
    for (const auto& arc : arcs) {
      svg::Points pts;
      double last_az = -1.0;
      for (const auto& p : arc) {
        const bool wrap = last_az >= 0.0 && std::abs(p.azimuth - last_az) > 180.0;
        last_az = p.azimuth;
        if (p.altitude > 0.0 && !wrap) {
          pts.emplace_back(xs(p.azimuth), ys(p.altitude));
        } else {
          c.w.polyline(pts, "#999999", 0.6, "day-arc");
          pts.clear();
          if (p.altitude > 0.0) pts.emplace_back(xs(p.azimuth), ys(p.altitude));
        }
      }
      c.w.polyline(pts, "#999999", 0.6, "day-arc");
    }
    c.w.open_group("points");
    for (std::size_t i = 0; i < c.frame.size(); ++i) {
      if (!c.mask[i] || !alt[i] || !az[i] || *alt[i] <= 0.0) continue;
      if (color && !(*color)[i]) continue;
      c.w.circle(xs(*az[i]), ys(*alt[i]), 1.8, color ? (*scale)(*(*color)[i]) : std::string("#f4a582"), "point");
      ++c.doc.point_count;
    }
    c.w.close_group();
    c.w.close_group();
    draw_frame(c.w, b);
    x_ticks(c.w, b, xs, {0.0, 360.0});
    axis_titles(c.w, b, "Azimuth [deg]", "Altitude [deg]");
  }
  if (scale) color_legend(c.w, *scale, c.req, label_of(c.frame, *c.req.color_variable));
}

void degree_day_chart(Context& c) {
  if (c.req.variable != "t_db") incompatible("degree days are computed from t_db only");
  const auto table = analytics::degree_days(c.frame, c.req.base_heating, c.req.base_cooling);
  double top = 0.0;
  for (std::size_t m = 0; m < 12; ++m) top = std::max({top, table.hdd[m], table.cdd[m]});
  AxisRange yr{0.0, 1600.0};
  if (c.req.range_mode == RangeMode::Global) {
    if (auto g = global_range("degree_days")) yr = *g;
    yr.max = std::max(yr.max, top);
  } else {
    yr = {0.0, top > 0.0 ? nice_local_range(0.0, top).max : 1.0};
  }
  const Box b = plot_box(c.req);
  const Linear xs{0.0, 12.0, b.x0, b.x1};
  const Linear ys{yr.min, yr.max, b.y1, b.y0};
  c.doc.x_axis = transform_of(xs);
  c.doc.y_axis = transform_of(ys);
  c.title = "Heating and cooling degree days (base " + format_sig(table.base_heating, 6) + " / " +
            format_sig(table.base_cooling, 6) + " C)";
  y_ticks(c.w, b, ys, yr);
  c.w.open_group("plot", plot_group_attributes(c.doc.x_axis, c.doc.y_axis));
  for (int m = 0; m < 12; ++m) {
    const double x = xs(m);
    const double slot = xs(m + 1) - x;
    const auto k = static_cast<std::size_t>(m);
    c.w.rect(x + slot * 0.1, ys(table.hdd[k]), slot * 0.38, ys(0.0) - ys(table.hdd[k]), "#2166ac", "bar hdd",
             "data-value=\"" + format_sig(table.hdd[k], 6) + "\"");
    c.w.rect(x + slot * 0.52, ys(table.cdd[k]), slot * 0.38, ys(0.0) - ys(table.cdd[k]), "#b2182b", "bar cdd",
             "data-value=\"" + format_sig(table.cdd[k], 6) + "\"");
    c.w.text(x + slot / 2.0, b.y1 + 17.0, calendar::month_abbrev(m + 1), "middle", 10.0);
  }
  c.doc.point_count = 24;
  c.w.close_group();
  draw_frame(c.w, b);
  axis_titles(c.w, b, "", "degree days [K day]");
  c.w.open_group("legend");
  const double lx = c.req.width - 120.0;
  c.w.rect(lx, 60.0, 14.0, 10.0, "#2166ac");
  c.w.text(lx + 18.0, 69.0, "HDD " + format_sig(table.annual_hdd, 6), "start", 9.0);
  c.w.rect(lx, 78.0, 14.0, 10.0, "#b2182b");
  c.w.text(lx + 18.0, 87.0, "CDD " + format_sig(table.annual_cdd, 6), "start", 9.0);
  c.w.close_group();
}

void histogram_chart(Context& c) {
  const auto& var = c.req.variable;
  const auto& values = c.frame.values(var);
  if (c.req.bins == 0) throw BadRequest("BadRange", "histogram needs at least one bin");
  const auto xr = axis_range(var, c.req.range_mode, c.frame);
  std::vector<std::size_t> counts(c.req.bins, 0);
  std::size_t total = 0;
  for (std::size_t i = 0; i < c.frame.size(); ++i) {
    if (!c.mask[i] || !values[i] || *values[i] < xr.min || *values[i] > xr.max) continue;
    ++counts[analytics::uniform_bin(*values[i], xr.min, xr.max, c.req.bins)];
    ++total;
  }
  // Percent of counted hours; the global mode uses the full 0-100 scale.
  AxisRange yr{0.0, 100.0};
  if (c.req.range_mode == RangeMode::Local) {
    double top = 0.0;
    for (auto n : counts) top = std::max(top, total ? 100.0 * static_cast<double>(n) / static_cast<double>(total) : 0.0);
    yr = {0.0, top > 0.0 ? nice_local_range(0.0, top).max : 1.0};
  }
  const Box b = plot_box(c.req);
  const Linear xs{xr.min, xr.max, b.x0, b.x1};
  const Linear ys{yr.min, yr.max, b.y1, b.y0};
  c.doc.x_axis = transform_of(xs);
  c.doc.y_axis = transform_of(ys);
  c.title = "Distribution of " + var;
  y_ticks(c.w, b, ys, yr);
  c.w.open_group("plot", plot_group_attributes(c.doc.x_axis, c.doc.y_axis));
  const double width = (xr.max - xr.min) / static_cast<double>(c.req.bins);
  for (std::size_t k = 0; k < c.req.bins; ++k) {
    const double pct = total ? 100.0 * static_cast<double>(counts[k]) / static_cast<double>(total) : 0.0;
    const double x0 = xs(xr.min + static_cast<double>(k) * width);
    const double x1 = k + 1 == c.req.bins ? xs(xr.max) : xs(xr.min + static_cast<double>(k + 1) * width);
    c.w.rect(x0, ys(pct), x1 - x0, ys(0.0) - ys(pct), "#4393c3", "bar",
             "data-count=\"" + std::to_string(counts[k]) + "\" stroke=\"#ffffff\" stroke-width=\"0.5\"");
  }
  c.doc.point_count = total;
  c.w.close_group();
  draw_frame(c.w, b);
  x_ticks(c.w, b, xs, xr);
  axis_titles(c.w, b, label_of(c.frame, var), "share of hours [%]");
}

void explorer_scatter(Context& c) {
  const auto& color_var = *c.req.color_variable;
  const auto data = analytics::explorer_triple(c.frame, c.req.variable, c.req.y_variable, color_var, c.req.filter,
                                               std::max<std::size_t>(c.req.bins, 1));
  const auto xr = axis_range(c.req.variable, c.req.range_mode, c.frame);
  const auto yr = axis_range(c.req.y_variable, c.req.range_mode, c.frame);
  const auto scale = make_scale(c.frame, color_var, c.req.range_mode);
  c.doc.color_range = scale.range;
  // Main panel bottom-left, marginal histograms above and to the right.
  const Box main{70.0, 120.0, c.req.width - 220.0, c.req.height - 55.0};
  const Box top{main.x0, 35.0, main.x1, 110.0};
  const Box side{main.x1 + 10.0, main.y0, main.x1 + 85.0, main.y1};
  const Linear xs{xr.min, xr.max, main.x0, main.x1};
  const Linear ys{yr.min, yr.max, main.y1, main.y0};
  c.doc.x_axis = transform_of(xs);
  c.doc.y_axis = transform_of(ys);
  c.title = "Explorer: " + c.req.variable + " vs " + c.req.y_variable + " coloured by " + color_var;

  y_ticks(c.w, main, ys, yr);
  clip_rect(c.w, main);
  c.w.open_group("plot", plot_group_attributes(c.doc.x_axis, c.doc.y_axis) + " clip-path=\"url(#plot-area)\"");
  for (const auto& p : data.points) c.w.circle(xs(p.x), ys(p.y), 1.6, scale(p.color), "point");
  c.doc.point_count = data.points.size();
  c.w.close_group();
  draw_frame(c.w, main);
  x_ticks(c.w, main, xs, xr);
  axis_titles(c.w, main, label_of(c.frame, c.req.variable), label_of(c.frame, c.req.y_variable));

  auto max_count = [](const analytics::Histogram& h) {
    std::size_t m = 1;
    for (auto n : h.counts) m = std::max(m, n);
    return static_cast<double>(m);
  };
  c.w.open_group("x-marginal");
  const double mx = max_count(data.x_hist);
  for (std::size_t k = 0; k < data.x_hist.counts.size(); ++k) {
    const double x0 = std::clamp(xs(data.x_hist.edges[k]), main.x0, main.x1);
    const double x1 = std::clamp(xs(data.x_hist.edges[k + 1]), main.x0, main.x1);
    const double h = (top.y1 - top.y0) * static_cast<double>(data.x_hist.counts[k]) / mx;
    c.w.rect(x0, top.y1 - h, std::max(x1 - x0, 0.5), h, "#92c5de", "bar");
  }
  c.w.close_group();
  c.w.open_group("y-marginal");
  const double my = max_count(data.y_hist);
  for (std::size_t k = 0; k < data.y_hist.counts.size(); ++k) {
    const double y0 = std::clamp(ys(data.y_hist.edges[k + 1]), main.y0, main.y1);
    const double y1 = std::clamp(ys(data.y_hist.edges[k]), main.y0, main.y1);
    const double w = (side.x1 - side.x0) * static_cast<double>(data.y_hist.counts[k]) / my;
    c.w.rect(side.x0, y0, w, std::max(y1 - y0, 0.5), "#92c5de", "bar");
  }
  c.w.close_group();
  color_legend(c.w, scale, c.req, label_of(c.frame, color_var));
}

void monthly_solar(Context& c) {
  if (c.req.variable != "ghi") incompatible("monthly solar chart plots ghi and dhi");
  const auto& ghi = c.frame.values("ghi");
  const auto& dhi = c.frame.values("dhi");
  const auto yr = axis_range("ghi", c.req.range_mode, c.frame);
  const auto panels = month_panels(c.req);
  c.title = "Monthly average hourly global and diffuse horizontal radiation";
  c.doc.x_axis = transform_of(Linear{0.0, 24.0, panels[0].x0, panels[0].x1});
  c.doc.y_axis = transform_of(Linear{yr.min, yr.max, panels[0].y1, panels[0].y0});
  for (int m = 1; m <= 12; ++m) {
    const auto& b = panels[static_cast<std::size_t>(m - 1)];
    const Linear xs{0.0, 24.0, b.x0, b.x1};
    const Linear ys{yr.min, yr.max, b.y1, b.y0};
    panel_axes(c.w, b, ys, yr, m, (m - 1) % 4 == 0);
    std::array<double, 24> sg{}, sd{};
    std::array<int, 24> ng{}, nd{};
    for (std::size_t i = 0; i < c.frame.size(); ++i) {
      if (c.frame.months()[i] != m || !c.mask[i]) continue;
      const auto h = static_cast<std::size_t>(c.frame.hours()[i] - 1);
      if (ghi[i]) {
        sg[h] += *ghi[i];
        ++ng[h];
      }
      if (dhi[i]) {
        sd[h] += *dhi[i];
        ++nd[h];
      }
    }
    svg::Points pg, pd;
    for (std::size_t h = 0; h < 24; ++h) {
      if (ng[h]) pg.emplace_back(xs(h + 0.5), ys(sg[h] / ng[h]));
      if (nd[h]) pd.emplace_back(xs(h + 0.5), ys(sd[h] / nd[h]));
    }
    c.w.open_group("panel", "data-month=\"" + std::to_string(m) + "\"");
    if (!pg.empty()) {
      svg::Points area = pg;
      area.emplace_back(pg.back().first, ys(0.0));
      area.emplace_back(pg.front().first, ys(0.0));
      c.w.polygon(area, "#fdae61", 0.35, "ghi-area");
    }
    c.w.polyline(pg, "#f46d43", 1.2, "ghi");
    c.w.polyline(pd, "#2166ac", 1.2, "dhi");
    c.doc.point_count += pg.size() + pd.size();
    c.w.close_group();
  }
  c.w.open_group("legend");
  c.w.line(c.req.width - 200.0, 20.0, c.req.width - 186.0, 20.0, "#f46d43", 1.5);
  c.w.text(c.req.width - 182.0, 23.0, "global horizontal", "start", 9.0);
  c.w.line(c.req.width - 100.0, 20.0, c.req.width - 86.0, 20.0, "#2166ac", 1.5);
  c.w.text(c.req.width - 82.0, 23.0, "diffuse", "start", 9.0);
  c.w.close_group();
  c.w.text(c.req.width / 2.0, c.req.height - 10.0, "Hour of day", "middle", 11.0, "axis-title");
}

std::string metadata_block(const ClimateFrame& frame, const ChartRequest& req, const std::string& hash) {
  const auto& loc = frame.location();
  return "<metadata>\n<clima:chart xmlns:clima=\"urn:clima:chart\" tool=\"clima\" version=\"" +
         svg::escape(version()) + "\" request-hash=\"" + hash + "\" license=\"CC BY 4.0\" kind=\"" +
         std::string(to_string(req.kind)) + "\" range-mode=\"" + std::string(to_string(req.range_mode)) +
         "\" station=\"" + svg::escape(loc.city) + "\" country=\"" + svg::escape(loc.country) + "\" request=\"" +
         svg::escape(canonical_form(req)) + "\"/>\n</metadata>\n";
}

}  // namespace

std::string_view to_string(ChartKind kind) {
  switch (kind) {
    case ChartKind::Heatmap: return "heatmap";
    case ChartKind::YearlyRange: return "yearly_range";
    case ChartKind::DailyProfiles: return "daily_profiles";
    case ChartKind::WindRose: return "wind_rose";
    case ChartKind::Psychrometric: return "psychrometric";
    case ChartKind::SunPathSpherical: return "sun_path_spherical";
    case ChartKind::SunPathCartesian: return "sun_path_cartesian";
    case ChartKind::DegreeDays: return "degree_days";
    case ChartKind::Histogram: return "histogram";
    case ChartKind::ExplorerScatter: return "explorer_scatter";
    case ChartKind::MonthlySolar: return "monthly_solar";
  }
  return "";
}

std::optional<ChartKind> chart_kind_from_string(std::string_view name) {
  for (auto k : kAllChartKinds) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

std::string_view to_string(RangeMode mode) { return mode == RangeMode::Global ? "global" : "local"; }

std::optional<RangeMode> range_mode_from_string(std::string_view name) {
  if (name == "global") return RangeMode::Global;
  if (name == "local") return RangeMode::Local;
  return std::nullopt;
}

ChartRequest with_defaults(ChartRequest r) {
  if (r.variable.empty()) {
    switch (r.kind) {
      case ChartKind::WindRose: r.variable = "wind_speed"; break;
      case ChartKind::SunPathSpherical:
      case ChartKind::SunPathCartesian: r.variable = "solar_altitude"; break;
      case ChartKind::MonthlySolar: r.variable = "ghi"; break;
      default: r.variable = "t_db";
    }
  }
  if (r.kind == ChartKind::ExplorerScatter) {
    if (r.y_variable.empty()) r.y_variable = "rh";
    if (!r.color_variable) r.color_variable = r.variable;
  }
  return r;
}

std::string canonical_form(const ChartRequest& request) {
  const auto r = with_defaults(request);
  std::string s = "kind=" + std::string(to_string(r.kind));
  s += ";variable=" + r.variable;
  s += ";y=" + r.y_variable;
  s += ";color=" + r.color_variable.value_or("");
  s += ";range=" + std::string(to_string(r.range_mode));
  s += ";months=" + analytics::describe_months(r.filter.months);
  s += ";hours=" + analytics::describe_hours(r.filter.hours);
  s += ";filter=" + r.filter.variable.value_or("");
  s += ";min=" + (r.filter.variable_min ? format_exact(*r.filter.variable_min) : std::string());
  s += ";max=" + (r.filter.variable_max ? format_exact(*r.filter.variable_max) : std::string());
  s += ";size=" + std::to_string(r.width) + "x" + std::to_string(r.height);
  s += ";bases=" + format_exact(r.base_heating) + "," + format_exact(r.base_cooling);
  s += ";bins=" + std::to_string(r.bins);
  return s;
}

std::string request_hash(const ChartRequest& request) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : canonical_form(request)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

SvgDocument render(const ClimateFrame& frame, const ChartRequest& request) {
  const auto req = with_defaults(request);
  if (req.width < 200 || req.width > 4000 || req.height < 150 || req.height > 4000) {
    throw BadRequest("BadRange", "chart size must lie within 200x150 and 4000x4000 px");
  }
  if (req.color_variable) (void)frame.column(*req.color_variable);
  (void)frame.column(req.variable);
  Context c{frame, req, analytics::filter_mask(frame, req.filter), svg::Writer(req.width, req.height), {}, {}};
  c.doc.request_hash = request_hash(req);
  switch (req.kind) {
    case ChartKind::Heatmap: heatmap(c); break;
    case ChartKind::YearlyRange: yearly_range(c); break;
    case ChartKind::DailyProfiles: daily_profiles(c); break;
    case ChartKind::WindRose: wind_rose(c); break;
    case ChartKind::Psychrometric: psychrometric(c); break;
    case ChartKind::SunPathSpherical: sun_path(c, solar::Projection::Spherical); break;
    case ChartKind::SunPathCartesian: sun_path(c, solar::Projection::Cartesian); break;
    case ChartKind::DegreeDays: degree_day_chart(c); break;
    case ChartKind::Histogram: histogram_chart(c); break;
    case ChartKind::ExplorerScatter: explorer_scatter(c); break;
    case ChartKind::MonthlySolar: monthly_solar(c); break;
  }
  const auto& loc = frame.location();
  std::string title = c.title;
  if (!loc.city.empty()) title += " - " + loc.city + (loc.country.empty() ? "" : ", " + loc.country);
  c.w.text(req.width / 2.0, 22.0, title, "middle", 13.0, "chart-title");
  c.doc.text = c.w.finish(title, metadata_block(frame, req, c.doc.request_hash));
  return c.doc;
}

}  // namespace clima::render
