#include "clima/params.hpp"

#include <algorithm>

#include "clima/error.hpp"
#include "clima/numfmt.hpp"

namespace clima::params {

namespace {

BadRequest bad_parameter(std::string_view key, std::string_view value) {
  return BadRequest("BadParameter", "invalid value '" + std::string(value) + "' for " + std::string(key));
}

constexpr std::array<std::string_view, 10> kChartKeys{"variable", "var",          "y",            "color",
                                                             "range",    "width",        "height",       "base_heating",
                                                             "base_cooling", "bins"};

}  // namespace

void require_known(const ParamMap& params, std::initializer_list<std::string_view> allowed,
                   std::span<const std::string_view> also_allowed) {
  for (const auto& [key, value] : params) {
    const bool ok = std::find(allowed.begin(), allowed.end(), key) != allowed.end() ||
                    std::find(also_allowed.begin(), also_allowed.end(), key) != also_allowed.end();
    if (!ok) throw BadRequest("UnknownParameter", "unknown parameter '" + key + "'");
  }
}

std::optional<std::string> text(const ParamMap& params, std::string_view key) {
  auto it = params.find(key);
  if (it == params.end()) return std::nullopt;
  return it->second;
}

std::optional<double> number(const ParamMap& params, std::string_view key) {
  auto it = params.find(key);
  if (it == params.end()) return std::nullopt;
  const auto v = parse_double(it->second);
  if (!v) throw bad_parameter(key, it->second);
  return v;
}

std::optional<long long> integer(const ParamMap& params, std::string_view key) {
  auto it = params.find(key);
  if (it == params.end()) return std::nullopt;
  const auto v = parse_int(it->second);
  if (!v) throw bad_parameter(key, it->second);
  return v;
}

analytics::RowFilter parse_filter(const ParamMap& params) {
  analytics::RowFilter f;
  if (auto p = text(params, "preset")) f = analytics::preset_filter(*p);
  if (auto m = text(params, "months")) f.months = analytics::parse_months(*m);
  if (auto h = text(params, "hours")) f.hours = analytics::parse_hours(*h);
  if (auto v = text(params, "filter_var")) {
    if (v->empty()) throw bad_parameter("filter_var", *v);
    f.variable = *v;
    f.variable_min = number(params, "filter_min");
    f.variable_max = number(params, "filter_max");
    if (f.variable_min && f.variable_max && *f.variable_min > *f.variable_max) {
      throw BadRequest("BadRange", "filter_min exceeds filter_max");
    }
  } else if (params.count("filter_min") || params.count("filter_max")) {
    throw BadRequest("BadParameter", "filter_min/filter_max need filter_var");
  }
  return f;
}

render::ChartRequest parse_chart_request(std::string_view kind, const ParamMap& params) {
  for (const auto& [key, value] : params) {
    const bool ok = std::find(kChartKeys.begin(), kChartKeys.end(), key) != kChartKeys.end() ||
                    std::find(kFilterKeys.begin(), kFilterKeys.end(), key) != kFilterKeys.end();
    if (!ok) throw BadRequest("UnknownParameter", "unknown parameter '" + key + "'");
  }
  render::ChartRequest r;
  const auto k = render::chart_kind_from_string(kind);
  if (!k) throw BadRequest("UnknownChart", "unknown chart kind '" + std::string(kind) + "'");
  r.kind = *k;
  if (params.count("variable") && params.count("var")) {
    throw BadRequest("BadParameter", "give either variable or var, not both");
  }
  if (auto v = text(params, "variable")) r.variable = *v;
  if (auto v = text(params, "var")) r.variable = *v;
  if (auto v = text(params, "y")) r.y_variable = *v;
  if (auto v = text(params, "color")) {
    if (!v->empty()) r.color_variable = *v;
  }
  if (auto v = text(params, "range")) {
    const auto mode = render::range_mode_from_string(*v);
    if (!mode) throw bad_parameter("range", *v);
    r.range_mode = *mode;
  }
  if (auto v = integer(params, "width")) r.width = static_cast<int>(std::clamp<long long>(*v, -1, 100000));
  if (auto v = integer(params, "height")) r.height = static_cast<int>(std::clamp<long long>(*v, -1, 100000));
  if (auto v = number(params, "base_heating")) r.base_heating = *v;
  if (auto v = number(params, "base_cooling")) r.base_cooling = *v;
  if (auto v = integer(params, "bins")) {
    if (*v < 1 || *v > 500) throw bad_parameter("bins", std::to_string(*v));
    r.bins = static_cast<std::size_t>(*v);
  }
  r.filter = parse_filter(params);
  return r;
}

ParamMap chart_request_params(const render::ChartRequest& request) {
  const render::ChartRequest defaults;
  ParamMap p;
  if (!request.variable.empty()) p["variable"] = request.variable;
  if (!request.y_variable.empty()) p["y"] = request.y_variable;
  if (request.color_variable) p["color"] = *request.color_variable;
  p["range"] = std::string(render::to_string(request.range_mode));
  if (request.width != defaults.width) p["width"] = std::to_string(request.width);
  if (request.height != defaults.height) p["height"] = std::to_string(request.height);
  if (request.base_heating != defaults.base_heating) p["base_heating"] = format_exact(request.base_heating);
  if (request.base_cooling != defaults.base_cooling) p["base_cooling"] = format_exact(request.base_cooling);
  if (request.bins != defaults.bins) p["bins"] = std::to_string(request.bins);
  if (!request.filter.all_months()) p["months"] = analytics::describe_months(request.filter.months);
  if (!request.filter.all_hours()) p["hours"] = analytics::describe_hours(request.filter.hours);
  if (request.filter.variable) {
    p["filter_var"] = *request.filter.variable;
    if (request.filter.variable_min) p["filter_min"] = format_exact(*request.filter.variable_min);
    if (request.filter.variable_max) p["filter_max"] = format_exact(*request.filter.variable_max);
  }
  return p;
}

}  // namespace clima::params
