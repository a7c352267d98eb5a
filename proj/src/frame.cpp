#include "clima/frame.hpp"

#include <algorithm>
#include <array>

#include "clima/calendar.hpp"
#include "clima/comfort.hpp"
#include "clima/csv.hpp"
#include "clima/error.hpp"
#include "clima/numfmt.hpp"
#include "clima/solar.hpp"
#include "clima/thermo.hpp"

namespace clima::analytics {

namespace {

template <typename F>
std::optional<double> guarded(F&& f) {
  try {
    return f();
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

const std::array<std::string_view, 4> kUtciColumns{"utci_sun_wind", "utci_sun_nowind", "utci_nosun_wind",
                                                   "utci_nosun_nowind"};

}  // namespace

const std::vector<std::string>& derived_column_names() {
  static const std::vector<std::string> names{
      "day_of_year",
      "station_pressure",
      "vapor_pressure",
      "humidity_ratio",
      "t_wb",
      "enthalpy",
      "solar_altitude",
      "solar_azimuth",
      "delta_mrt",
      "utci_sun_wind",
      "utci_sun_nowind",
      "utci_nosun_wind",
      "utci_nosun_nowind",
      "utci_sun_wind_category",
      "utci_sun_nowind_category",
      "utci_nosun_wind_category",
      "utci_nosun_nowind_category",
      "t_rm",
      "adaptive_t_comf",
      "adaptive_80_lower",
      "adaptive_80_upper",
      "adaptive_90_lower",
      "adaptive_90_upper",
  };
  return names;
}

bool ClimateFrame::has_column(std::string_view name) const { return index_.find(name) != index_.end(); }

const Column& ClimateFrame::column(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw UnknownColumn(std::string(name));
  return columns_[it->second];
}

void ClimateFrame::add_column(std::string name, std::string unit, Series values) {
  columns_.push_back({std::move(name), std::move(unit), std::move(values)});
}

void ClimateFrame::index_columns() {
  index_.clear();
  for (std::size_t i = 0; i < columns_.size(); ++i) index_[columns_[i].name] = i;
}

ClimateFrame ClimateFrame::from_columns(epw::Location location, int reference_year, std::vector<int> months,
                                        std::vector<int> days, std::vector<int> hours, std::vector<Column> columns) {
  if (months.size() != days.size() || months.size() != hours.size()) {
    throw std::invalid_argument("timestamp vectors differ in length");
  }
  for (const auto& c : columns) {
    if (c.values.size() != months.size()) throw std::invalid_argument("column " + c.name + " has the wrong length");
  }
  ClimateFrame f;
  f.location_ = std::move(location);
  f.reference_year_ = reference_year;
  f.month_ = std::move(months);
  f.day_ = std::move(days);
  f.hour_ = std::move(hours);
  bool leap = false;
  for (std::size_t i = 0; i < f.month_.size(); ++i) leap = leap || (f.month_[i] == 2 && f.day_[i] == 29);
  f.doy_.resize(f.month_.size());
  for (std::size_t i = 0; i < f.month_.size(); ++i) f.doy_[i] = calendar::day_of_year(f.month_[i], f.day_[i], leap);
  f.columns_ = std::move(columns);
  f.index_columns();
  return f;
}

ClimateFrame build_frame(const epw::EpwFile& file) {
  if (!file.is_single_hourly_period()) {
    throw BadRequest("UnsupportedCadence", "analytics need exactly one data period at one record per hour");
  }
  const auto& period = file.data_periods.front();
  const std::size_t n = file.records.size();
  if (period.start_month != 1 || period.start_day != 1 || period.end_month != 12 || period.end_day != 31 ||
      (n != 8760 && n != 8784)) {
    throw BadRequest("UnsupportedCadence", "analytics need a full calendar year of hourly records");
  }

  ClimateFrame f;
  f.location_ = file.location;
  const int first_year = file.records.front().year;
  const bool leap_file = n == 8784;
  f.reference_year_ = (first_year >= 1900 && first_year <= 2100) ? first_year : (leap_file ? 2000 : 2001);

  f.month_.resize(n);
  f.day_.resize(n);
  f.hour_.resize(n);
  f.doy_.resize(n);
  Series year(n), month(n), day(n), hour(n), minute(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& r = file.records[i];
    f.month_[i] = r.month;
    f.day_[i] = r.day;
    f.hour_[i] = r.hour;
    f.doy_[i] = calendar::day_of_year(r.month, r.day, leap_file);
    year[i] = r.year;
    month[i] = r.month;
    day[i] = r.day;
    hour[i] = r.hour;
    minute[i] = r.minute;
  }
  f.add_column("year", "", std::move(year));
  f.add_column("month", "", std::move(month));
  f.add_column("day", "", std::move(day));
  f.add_column("hour", "", std::move(hour));
  f.add_column("minute", "", std::move(minute));
  for (const auto& spec : epw::field_specs()) {
    Series s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = file.records[i].get(spec.field);
    f.add_column(std::string(spec.name), std::string(spec.unit), std::move(s));
  }

  Series doy(n), p_station(n), p_vapor(n), w(n), t_wb(n), h(n), alt(n), az(n), d_mrt(n);
  std::array<Series, 4> utci_v{Series(n), Series(n), Series(n), Series(n)};
  std::array<Series, 4> utci_c{Series(n), Series(n), Series(n), Series(n)};
  const double fallback_pressure = thermo::pressure_at_elevation(file.location.elevation);

  for (std::size_t i = 0; i < n; ++i) {
    const auto& r = file.records[i];
    doy[i] = f.doy_[i];
    const double p = r.pressure().value_or(fallback_pressure);
    p_station[i] = p;
    const auto t = r.t_db();
    const auto rh = r.rh();
    if (t && rh) {
      p_vapor[i] = guarded([&] { return thermo::vapor_pressure(*t, *rh); });
      w[i] = guarded([&] { return thermo::humidity_ratio(*t, *rh, p); });
      t_wb[i] = guarded([&] { return thermo::wet_bulb(*t, *rh, p); });
      if (w[i]) h[i] = thermo::enthalpy(*t, *w[i]);
    }
    const auto pos = solar::solar_position(file.location, {f.reference_year_, r.month, r.day, r.hour});
    alt[i] = pos.altitude;
    az[i] = pos.azimuth;
    if (r.dni() && r.dhi() && r.ghi()) d_mrt[i] = comfort::solar_mrt_delta(*r.dni(), *r.dhi(), *r.ghi(), pos.altitude);

    comfort::ScenarioInputs in{t, rh, r.wind_speed(), r.dni(), r.dhi(), r.ghi(), pos.altitude};
    std::array<std::optional<comfort::UtciResult>, 4> res{};
    try {
      res = comfort::utci_scenarios(in);
    } catch (const DomainError&) {
    }
    for (std::size_t k = 0; k < 4; ++k) {
      if (res[k]) {
        utci_v[k][i] = res[k]->value;
        utci_c[k][i] = static_cast<double>(static_cast<int>(res[k]->category));
      }
    }
  }

  // Prevailing mean outdoor temperature, broadcast to every hour of its day.
  Series t_db_series(n);
  for (std::size_t i = 0; i < n; ++i) t_db_series[i] = file.records[i].t_db();
  const auto daily = comfort::daily_means(t_db_series);
  const auto t_rm_daily = comfort::running_mean(std::span<const std::optional<double>>(daily));
  Series t_rm(n), t_comf(n), lo80(n), up80(n), lo90(n), up90(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& v = t_rm_daily[i / 24];
    if (!v) continue;
    t_rm[i] = *v;
    const auto band = comfort::adaptive_band(*v);
    if (!band.applicable) continue;
    t_comf[i] = band.t_comf;
    lo80[i] = band.lower_80;
    up80[i] = band.upper_80;
    lo90[i] = band.lower_90;
    up90[i] = band.upper_90;
  }

  f.add_column("day_of_year", "", std::move(doy));
  f.add_column("station_pressure", "Pa", std::move(p_station));
  f.add_column("vapor_pressure", "Pa", std::move(p_vapor));
  f.add_column("humidity_ratio", "kg/kg", std::move(w));
  f.add_column("t_wb", "C", std::move(t_wb));
  f.add_column("enthalpy", "kJ/kg", std::move(h));
  f.add_column("solar_altitude", "deg", std::move(alt));
  f.add_column("solar_azimuth", "deg", std::move(az));
  f.add_column("delta_mrt", "K", std::move(d_mrt));
  for (std::size_t k = 0; k < 4; ++k) f.add_column(std::string(kUtciColumns[k]), "C", std::move(utci_v[k]));
  for (std::size_t k = 0; k < 4; ++k) {
    f.add_column(std::string(kUtciColumns[k]) + "_category", "class", std::move(utci_c[k]));
  }
  f.add_column("t_rm", "C", std::move(t_rm));
  f.add_column("adaptive_t_comf", "C", std::move(t_comf));
  f.add_column("adaptive_80_lower", "C", std::move(lo80));
  f.add_column("adaptive_80_upper", "C", std::move(up80));
  f.add_column("adaptive_90_lower", "C", std::move(lo90));
  f.add_column("adaptive_90_upper", "C", std::move(up90));
  f.index_columns();

  f.metadata_ = {
      {"psychrometrics", "ASHRAE Hyland-Wexler saturation pressure (water >= 0 C, ice < 0 C); wet bulb by bisection"},
      {"station_pressure", "EPW pressure, else standard atmosphere at station elevation"},
      {"solar_position", "NOAA/Meeus low-order series with refraction, interval midpoint, fixed standard time"},
      {"solar_reference_year", std::to_string(f.reference_year_)},
      {"utci", "6th-order regression; inputs clipped to validity; vapour pressure over water"},
      {"utci_wind", "EPW 10 m wind speed, not height corrected; no-wind scenarios use 0.5 m/s"},
      {"solar_mrt", "standing person: f_eff 0.725, absorptivity 0.7, emissivity 0.95, T_ref 20 C"},
      {"running_mean", "alpha 0.9, 7 days, cyclic year; days with more than 6 missing hours are absent"},
      {"adaptive_band", "t_comf = 0.31 t_rm + 17.8; 80% +-3.5 K; 90% +-2.5 K; 10 <= t_rm <= 33.5"},
  };
  return f;
}

std::string export_frame_csv(const ClimateFrame& frame) {
  std::string out;
  const auto& cols = frame.columns();
  out.reserve(frame.size() * cols.size() * 8 + 1024);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (c) out += ',';
    out += csv::escape(cols[c].unit.empty() ? cols[c].name : cols[c].name + " [" + cols[c].unit + "]");
  }
  out += "\r\n";
  for (std::size_t i = 0; i < frame.size(); ++i) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (c) out += ',';
      if (const auto& v = cols[c].values[i]) out += format_exact(*v);
    }
    out += "\r\n";
  }
  return out;
}

}  // namespace clima::analytics
