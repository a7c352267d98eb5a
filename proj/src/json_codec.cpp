#include "clima/json_codec.hpp"

#include "clima/comfort.hpp"

namespace clima::codec {

namespace {

template <typename T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json encode(const analytics::DescriptiveStats& s) {
  return {{"count", s.count}, {"mean", opt(s.mean)},     {"std", opt(s.std)}, {"min", opt(s.min)},
          {"p25", opt(s.p25)}, {"median", opt(s.median)}, {"p75", opt(s.p75)}, {"max", opt(s.max)}};
}

Json encode(const analytics::Histogram& h) {
  return {{"min", h.min}, {"max", h.max}, {"edges", h.edges}, {"counts", h.counts}};
}

Json encode(const render::AxisTransform& t) {
  return {{"domain", {t.domain.min, t.domain.max}}, {"pixels", {t.pixel_start, t.pixel_end}}};
}

}  // namespace

Json encode(const epw::Location& l) {
  return {{"city", l.city},         {"state_region", l.state_region}, {"country", l.country},
          {"source", l.source},     {"wmo_id", l.wmo_id},             {"latitude", l.latitude},
          {"longitude", l.longitude}, {"timezone", l.timezone},       {"elevation", l.elevation}};
}

Json encode(const epw::ValidationReport& r) {
  Json issues = Json::array();
  for (const auto& i : r.issues) {
    issues.push_back({{"kind", epw::to_string(i.kind)}, {"line", i.line}, {"message", i.message}});
  }
  return {{"ok", r.ok},
          {"header_ok", r.header_ok},
          {"header_message", r.header_message},
          {"record_count", r.record_count},
          {"missing_count", r.missing_count},
          {"out_of_range_count", r.out_of_range_count},
          {"chronology_violations", r.chronology_violations},
          {"issues", issues}};
}

Json encode(const analytics::RowFilter& f) {
  return {{"months", analytics::describe_months(f.months)},
          {"hours", analytics::describe_hours(f.hours)},
          {"variable", opt(f.variable)},
          {"variable_min", opt(f.variable_min)},
          {"variable_max", opt(f.variable_max)}};
}

Json encode(const analytics::SummaryReport& r) {
  auto extreme = [](const std::optional<analytics::MonthExtreme>& m) -> Json {
    if (!m) return nullptr;
    return {{"month", m->month}, {"name", m->name}, {"mean_t_db", m->mean}};
  };
  return {{"location", encode(r.location)},
          {"record_count", r.record_count},
          {"mean_t_db", opt(r.mean_t_db)},
          {"hottest_month", extreme(r.hottest_month)},
          {"coldest_month", extreme(r.coldest_month)},
          {"annual_ghi_kwh_m2", r.annual_ghi_kwh},
          {"annual_dhi_kwh_m2", r.annual_dhi_kwh},
          {"diffuse_share_pct", opt(r.diffuse_share)},
          {"koppen", {{"label", r.koppen.label}, {"precipitation_missing", r.koppen.precipitation_missing}}}};
}

Json encode(const analytics::DegreeDayTable& t) {
  return {{"base_heating", t.base_heating}, {"base_cooling", t.base_cooling}, {"hdd", t.hdd},
          {"cdd", t.cdd},                   {"annual_hdd", t.annual_hdd},     {"annual_cdd", t.annual_cdd},
          {"days_counted", t.days_counted}, {"method", t.method}};
}

Json encode(const analytics::NatVentResult& r) {
  std::string mask(r.mask.size(), '0');
  for (std::size_t i = 0; i < r.mask.size(); ++i) {
    if (r.mask[i]) mask[i] = '1';
  }
  return {{"eligible_hours", r.eligible_hours},
          {"total_hours", r.total_hours},
          {"eligible_by_month", r.eligible_by_month},
          {"total_by_month", r.total_by_month},
          {"mask", mask},
          {"t_min", r.request.t_min},
          {"t_max", r.request.t_max},
          {"radiant_surface_t", opt(r.request.radiant_surface_t)},
          {"filter", encode(r.request.filter)}};
}

Json encode(const analytics::WindRose& r) {
  Json sectors = Json::array();
  for (std::size_t s = 0; s < analytics::kSectorCount; ++s) {
    sectors.push_back({{"sector", analytics::sector_name(s)},
                       {"center_deg", static_cast<double>(s) * 22.5},
                       {"frequency_pct", r.frequency[s]},
                       {"counts", r.counts[s]}});
  }
  return {{"speed_bin_edges", analytics::kSpeedBinEdges},
          {"sectors", sectors},
          {"calm_pct", r.calm},
          {"calm_count", r.calm_count},
          {"total", r.total},
          {"descriptor", r.descriptor}};
}

Json encode(const analytics::MonthlyStatistics& s) {
  Json months = Json::array();
  for (const auto& m : s.months) months.push_back(encode(m));
  return {{"column", s.column}, {"unit", s.unit}, {"months", months}, {"annual", encode(s.annual)}};
}

Json encode(const analytics::ExplorerResult& r) {
  Json x = Json::array(), y = Json::array(), c = Json::array(), rows = Json::array();
  for (const auto& p : r.points) {
    x.push_back(p.x);
    y.push_back(p.y);
    c.push_back(p.color);
    rows.push_back(p.row);
  }
  return {{"x_variable", r.x},
          {"y_variable", r.y},
          {"color_variable", r.color},
          {"bins", r.bins},
          {"points", {{"x", x}, {"y", y}, {"color", c}, {"row", rows}}},
          {"x_histogram", encode(r.x_hist)},
          {"y_histogram", encode(r.y_hist)},
          {"heatmap", r.heatmap}};
}

Json encode(const analytics::UtciDistribution& d) {
  Json categories = Json::array();
  for (int c = 0; c < comfort::kCategoryCount; ++c) {
    categories.push_back(comfort::to_string(static_cast<comfort::StressCategory>(c)));
  }
  return {{"scenario", d.scenario}, {"categories", categories}, {"monthly", d.monthly},
          {"annual", d.annual},     {"hours", d.hours}};
}

Json encode(const analytics::PsychroData& d) {
  Json out{{"color_by", opt(d.color_by)}, {"row_count", d.row_count}};
  if (d.color_by) {
    Json t = Json::array(), w = Json::array(), c = Json::array(), rows = Json::array();
    for (const auto& p : d.points) {
      t.push_back(p.t_db);
      w.push_back(p.humidity_ratio);
      c.push_back(opt(p.color));
      rows.push_back(p.row);
    }
    out["points"] = {{"t_db", t}, {"humidity_ratio", w}, {"color", c}, {"row", rows}};
  } else {
    Json cells = Json::array();
    for (const auto& cell : d.cells) {
      cells.push_back({{"t_db_bin", cell.t_bin}, {"w_bin", cell.w_bin}, {"count", cell.count}});
    }
    out["t_db_step"] = analytics::kPsychroTemperatureStep;
    out["w_step"] = analytics::kPsychroHumidityStep;
    out["cells"] = cells;
  }
  return out;
}

Json encode(const render::SvgDocument& doc) {
  Json out{{"request_hash", doc.request_hash}, {"point_count", doc.point_count}};
  out["x_axis"] = doc.x_axis ? encode(*doc.x_axis) : Json(nullptr);
  out["y_axis"] = doc.y_axis ? encode(*doc.y_axis) : Json(nullptr);
  out["color_range"] = doc.color_range ? Json{doc.color_range->min, doc.color_range->max} : Json(nullptr);
  return out;
}

Json encode_columns(const analytics::ClimateFrame& frame) {
  Json cols = Json::array();
  for (const auto& c : frame.columns()) cols.push_back({{"name", c.name}, {"unit", c.unit}});
  return {{"columns", cols}, {"rows", frame.size()}, {"metadata", frame.metadata()}};
}

Json error_body(std::string_view code, std::string_view message) {
  return {{"error", {{"code", code}, {"message", message}}}};
}

}  // namespace clima::codec
