#pragma once

#include <json.hpp>

#include "clima/analytics.hpp"
#include "clima/epw.hpp"
#include "clima/render.hpp"

namespace clima::codec {

using Json = nlohmann::json;

Json encode(const epw::Location& location);
Json encode(const epw::ValidationReport& report);
Json encode(const analytics::RowFilter& filter);
Json encode(const analytics::SummaryReport& report);
Json encode(const analytics::DegreeDayTable& table);
Json encode(const analytics::NatVentResult& result);
Json encode(const analytics::WindRose& rose);
Json encode(const analytics::MonthlyStatistics& stats);
Json encode(const analytics::ExplorerResult& result);
Json encode(const analytics::UtciDistribution& dist);
Json encode(const analytics::PsychroData& data);
Json encode(const render::SvgDocument& doc);  // sidecar: axes, colour range, hash, counts

/// Column names and units of a frame.
Json encode_columns(const analytics::ClimateFrame& frame);

/// {"error": {"code": ..., "message": ...}}
Json error_body(std::string_view code, std::string_view message);

}  // namespace clima::codec
