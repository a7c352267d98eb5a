#include <algorithm>
#include <cmath>
#include <map>

#include <json.hpp>

#include "clima/error.hpp"
#include "clima/render.hpp"
#include "clima/version.hpp"

namespace clima::render {

namespace {

const std::map<std::string, AxisRange, std::less<>>& preset_table() {
  static const auto table = [] {
    std::map<std::string, AxisRange, std::less<>> out;
    const auto doc = nlohmann::json::parse(global_ranges_json());
    for (const auto& [name, pair] : doc.at("ranges").items()) {
      out[name] = AxisRange{pair.at(0).get<double>(), pair.at(1).get<double>()};
    }
    return out;
  }();
  return table;
}

double nice_step(double raw) {
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 2.5, 5.0}) {
    if (m * mag >= raw) return m * mag;
  }
  return 10.0 * mag;
}

}  // namespace

std::optional<AxisRange> global_range(std::string_view variable) {
  const auto& t = preset_table();
  auto it = t.find(variable);
  if (it == t.end()) return std::nullopt;
  return it->second;
}

AxisRange nice_local_range(double lo, double hi) {
  if (lo > hi) std::swap(lo, hi);
  if (hi - lo == 0.0) return {lo - 1.0, hi + 1.0};
  const double pad = 0.05 * (hi - lo);
  const double a = lo - pad;
  const double b = hi + pad;
  const double step = nice_step((b - a) / 10.0);
  return {std::floor(a / step) * step, std::ceil(b / step) * step};
}

AxisRange axis_range(const std::string& variable, RangeMode mode, const analytics::ClimateFrame& frame) {
  const auto& values = frame.values(variable);
  if (mode == RangeMode::Global) {
    if (auto g = global_range(variable)) return *g;
  }
  bool any = false;
  double lo = 0.0, hi = 0.0;
  for (const auto& v : values) {
    if (!v) continue;
    if (!any) {
      lo = hi = *v;
      any = true;
    } else {
      lo = std::min(lo, *v);
      hi = std::max(hi, *v);
    }
  }
  if (any) return nice_local_range(lo, hi);
  if (auto g = global_range(variable)) return *g;
  return {0.0, 1.0};
}

}  // namespace clima::render
