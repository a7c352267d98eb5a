#pragma once

#include <array>
#include <initializer_list>
#include <span>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "clima/analytics.hpp"
#include "clima/render.hpp"

namespace clima::params {

/// Query-string style parameters shared by the HTTP API and the CLI.
using ParamMap = std::map<std::string, std::string, std::less<>>;

/// Keys understood by parse_filter.
inline constexpr std::array<std::string_view, 6> kFilterKeys{"months", "hours", "preset", "filter_var",
                                                                     "filter_min", "filter_max"};

/// Throws BadRequest("UnknownParameter") for keys outside `allowed`.
void require_known(const ParamMap& params, std::initializer_list<std::string_view> allowed,
                   std::span<const std::string_view> also_allowed = {});

std::optional<std::string> text(const ParamMap& params, std::string_view key);
/// Throws BadRequest("BadParameter") for malformed numbers.
std::optional<double> number(const ParamMap& params, std::string_view key);
std::optional<long long> integer(const ParamMap& params, std::string_view key);

/// preset (annual, DJF, MAM, JJA, SON, day, night) applies first, then
/// explicit months/hours ("a-b" with wrap, or comma lists) replace its parts.
analytics::RowFilter parse_filter(const ParamMap& params);

/// Keys: variable (or var), y, color, range, width, height, base_heating,
/// base_cooling, bins, plus the filter keys. Throws BadRequest.
render::ChartRequest parse_chart_request(std::string_view kind, const ParamMap& params);

/// Inverse of parse_chart_request for non-default fields.
ParamMap chart_request_params(const render::ChartRequest& request);

}  // namespace clima::params
