// Longhand recomputations of the analytics binning, written for clarity
// rather than speed. Used as oracles on small synthetic frames.
#pragma once

#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "clima/analytics.hpp"
#include "clima/thermo.hpp"
#include "fixtures.hpp"

namespace clima::testing::brute {

using analytics::ClimateFrame;
using analytics::RowFilter;
using analytics::Series;

inline bool selected(const RowFilter& f, int month, int hour) { return f.months[month - 1] && f.hours[hour - 1]; }

inline Series sampled(std::size_t n, std::mt19937_64& rng, const std::vector<double>& pool, double absent_share) {
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::bernoulli_distribution absent(absent_share);
  Series s(n);
  for (auto& v : s) {
    if (!absent(rng)) v = pool[pick(rng)];
  }
  return s;
}

inline std::vector<double> grid(double lo, double hi, double step) {
  std::vector<double> out;
  for (int k = 0; lo + k * step <= hi + 1e-12; ++k) out.push_back(lo + k * step);
  return out;
}

inline RowFilter random_filter(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> m(1, 12), h(1, 24);
  RowFilter f;
  f.months = analytics::month_range(m(rng), m(rng));
  f.hours = analytics::hour_range(h(rng), h(rng));
  return f;
}

struct NatVent {
  std::vector<bool> mask;
  std::size_t eligible = 0;
  std::size_t total = 0;
};

inline NatVent natural_ventilation(const ClimateFrame& f, const analytics::NatVentRequest& req) {
  const auto& t = f.values("t_db");
  const auto& dp = f.values("t_dp");
  const auto& rh = f.values("rh");
  NatVent r;
  r.mask.assign(f.size(), false);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!selected(req.filter, f.months()[i], f.hours()[i])) continue;
    ++r.total;
    bool ok = t[i] && req.t_min <= *t[i] && *t[i] <= req.t_max;
    if (ok && req.radiant_surface_t) {
      std::optional<double> dew = dp[i];
      if (!dew && rh[i]) dew = thermo::dew_point(*t[i], *rh[i]);
      ok = dew && *req.radiant_surface_t > *dew;
    }
    r.mask[i] = ok;
    r.eligible += ok;
  }
  return r;
}

struct Rose {
  std::array<std::array<std::size_t, analytics::kSpeedBinCount>, analytics::kSectorCount> counts{};
  std::size_t calm = 0;
  std::size_t total = 0;
};

inline Rose wind_rose(const ClimateFrame& f, const RowFilter& filter) {
  const auto& d = f.values("wind_dir");
  const auto& s = f.values("wind_speed");
  Rose r;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!selected(filter, f.months()[i], f.hours()[i]) || !s[i]) continue;
    if (*s[i] < 0.5) {
      ++r.calm;
      ++r.total;
      continue;
    }
    if (!d[i]) continue;
    // sector k holds [22.5k - 11.25, 22.5k + 11.25) clockwise from north
    std::size_t sector = 99;
    for (std::size_t k = 0; k < 16; ++k) {
      const double lo = 22.5 * static_cast<double>(k) - 11.25, hi = lo + 22.5;
      for (double dd : {*d[i], *d[i] - 360.0}) {
        if (lo <= dd && dd < hi) sector = k;
      }
    }
    if (sector == 99) throw std::logic_error("direction outside every sector");
    std::size_t bin = 0;
    for (std::size_t b = 0; b < analytics::kSpeedBinCount; ++b) {
      if (*s[i] >= analytics::kSpeedBinEdges[b]) bin = b;
    }
    ++r.counts[sector][bin];
    ++r.total;
  }
  return r;
}

struct Psychro {
  std::map<std::pair<long long, long long>, std::size_t> cells;
  std::size_t rows = 0;
  std::vector<std::size_t> colored_rows;
};

inline Psychro psychro(const ClimateFrame& f, const RowFilter& filter, const Series* color) {
  const auto& t = f.values("t_db");
  const auto& w = f.values("humidity_ratio");
  Psychro p;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!selected(filter, f.months()[i], f.hours()[i]) || !t[i] || !w[i]) continue;
    ++p.rows;
    if (color && (*color)[i]) p.colored_rows.push_back(i);
    long long tb = -1000;
    while (static_cast<double>(tb + 1) <= *t[i]) ++tb;
    long long wb = -1000;
    while (static_cast<double>(wb + 1) * 0.001 <= *w[i]) ++wb;
    ++p.cells[{tb, wb}];
  }
  return p;
}

struct Explorer {
  std::vector<std::size_t> rows;
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  std::vector<std::size_t> hx, hy;
  std::vector<std::vector<std::size_t>> heat;
};

// bin k holds [edge k, edge k+1) with the last bin closed on the right
inline std::size_t bin_of(double v, double lo, double hi, std::size_t bins) {
  if (!(hi > lo)) return 0;
  const double width = (hi - lo) / static_cast<double>(bins);
  std::size_t k = 0;
  for (std::size_t j = 1; j < bins; ++j) {
    if (v >= lo + static_cast<double>(j) * width) k = j;
  }
  return k;
}

inline Explorer explorer(const ClimateFrame& f, const std::string& xn, const std::string& yn, const std::string& cn,
                         const RowFilter& filter, std::size_t bins) {
  const auto& x = f.values(xn);
  const auto& y = f.values(yn);
  const auto& c = f.values(cn);
  Explorer e;
  e.xmin = e.ymin = 1e300;
  e.xmax = e.ymax = -1e300;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!selected(filter, f.months()[i], f.hours()[i]) || !x[i] || !y[i] || !c[i]) continue;
    e.rows.push_back(i);
    e.xmin = std::min(e.xmin, *x[i]);
    e.xmax = std::max(e.xmax, *x[i]);
    e.ymin = std::min(e.ymin, *y[i]);
    e.ymax = std::max(e.ymax, *y[i]);
  }
  e.hx.assign(bins, 0);
  e.hy.assign(bins, 0);
  e.heat.assign(bins, std::vector<std::size_t>(bins, 0));
  for (auto i : e.rows) {
    const auto bx = bin_of(*x[i], e.xmin, e.xmax, bins), by = bin_of(*y[i], e.ymin, e.ymax, bins);
    ++e.hx[bx];
    ++e.hy[by];
    ++e.heat[bx][by];
  }
  return e;
}

// Comparisons against the library; each returns the number of mismatches.

inline std::size_t compare_natural_ventilation(std::mt19937_64& rng, std::size_t n) {
  const auto t = sampled(n, rng, grid(0.0, 30.0, 0.5), 0.05);
  const auto dp = sampled(n, rng, grid(-5.0, 20.0, 0.5), 0.1);
  const auto rh = sampled(n, rng, grid(20.0, 100.0, 5.0), 0.05);
  const auto f = synthetic_frame({{"t_db", "C", t}, {"t_dp", "C", dp}, {"rh", "%", rh}}, n);
  analytics::NatVentRequest req;
  std::uniform_int_distribution<int> lo(0, 20), span(0, 10);
  std::bernoulli_distribution radiant(0.5);
  req.t_min = lo(rng);
  req.t_max = req.t_min + span(rng);
  req.filter = random_filter(rng);
  if (radiant(rng)) req.radiant_surface_t = static_cast<double>(lo(rng));
  const auto got = analytics::natural_ventilation(f, req);
  const auto want = brute::natural_ventilation(f, req);
  std::size_t bad = (got.eligible_hours != want.eligible) + (got.total_hours != want.total);
  for (std::size_t i = 0; i < n; ++i) bad += got.mask[i] != want.mask[i];
  return bad;
}

inline std::size_t compare_wind_rose(std::mt19937_64& rng, std::size_t n) {
  // an 11.25 degree grid lands exactly on sector edges half the time
  const auto d = sampled(n, rng, grid(0.0, 360.0, 11.25), 0.05);
  const auto s = sampled(n, rng, grid(0.0, 12.0, 0.5), 0.05);
  const auto f = synthetic_frame({{"wind_dir", "deg", d}, {"wind_speed", "m/s", s}}, n);
  const auto filter = random_filter(rng);
  const auto got = analytics::wind_rose(f, filter);
  const auto want = brute::wind_rose(f, filter);
  std::size_t bad = (got.calm_count != want.calm) + (got.total != want.total);
  for (std::size_t k = 0; k < analytics::kSectorCount; ++k) {
    for (std::size_t b = 0; b < analytics::kSpeedBinCount; ++b) bad += got.counts[k][b] != want.counts[k][b];
  }
  return bad;
}

inline std::size_t compare_psychro(std::mt19937_64& rng, std::size_t n) {
  // quarter-degree and quarter-gram grids put many points on bin edges
  const auto t = sampled(n, rng, grid(-10.0, 35.0, 0.25), 0.05);
  const auto w = sampled(n, rng, grid(0.0, 0.02, 0.00025), 0.05);
  const auto c = sampled(n, rng, grid(0, 50, 1), 0.2);
  const auto f = synthetic_frame({{"t_db", "C", t}, {"humidity_ratio", "kg/kg", w}, {"c", "", c}}, n);
  const auto filter = random_filter(rng);
  const auto want = brute::psychro(f, filter, &c);
  const auto freq = analytics::psychro_bins(f, std::nullopt, filter);
  std::size_t bad = (freq.row_count != want.rows) + (freq.cells.size() != want.cells.size());
  if (!bad) {
    std::size_t k = 0;
    for (const auto& [key, count] : want.cells) {
      const auto& cell = freq.cells[k++];
      bad += cell.t_bin != key.first || cell.w_bin != key.second || cell.count != count;
    }
  }
  const auto var = analytics::psychro_bins(f, std::string("c"), filter);
  if (var.points.size() != want.colored_rows.size()) return bad + 1;
  for (std::size_t j = 0; j < var.points.size(); ++j) {
    const auto i = want.colored_rows[j];
    bad += var.points[j].row != i || var.points[j].t_db != *t[i] || var.points[j].humidity_ratio != *w[i] ||
           var.points[j].color != c[i];
  }
  return bad;
}

inline std::size_t compare_explorer(std::mt19937_64& rng, std::size_t n, std::size_t bins) {
  const auto x = sampled(n, rng, grid(-5.0, 35.0, 0.5), 0.05);
  const auto y = sampled(n, rng, grid(0.0, 100.0, 1.0), 0.05);
  const auto c = sampled(n, rng, grid(0.0, 1000.0, 10.0), 0.05);
  const auto f = synthetic_frame({{"x", "", x}, {"y", "", y}, {"c", "", c}}, n);
  const auto filter = random_filter(rng);
  const auto got = analytics::explorer_triple(f, "x", "y", "c", filter, bins);
  const auto want = brute::explorer(f, "x", "y", "c", filter, bins);
  if (got.points.size() != want.rows.size()) return 1;
  std::size_t bad = 0;
  for (std::size_t j = 0; j < want.rows.size(); ++j) bad += got.points[j].row != want.rows[j];
  if (want.rows.empty()) return bad;
  bad += got.x_hist.min != want.xmin || got.x_hist.max != want.xmax;
  bad += got.y_hist.min != want.ymin || got.y_hist.max != want.ymax;
  bad += got.x_hist.counts != want.hx;
  bad += got.y_hist.counts != want.hy;
  bad += got.heatmap != want.heat;
  return bad;
}

}  // namespace clima::testing::brute
