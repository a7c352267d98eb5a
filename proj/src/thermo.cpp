#include "clima/thermo.hpp"

#include <cmath>
#include <string>

#include "clima/error.hpp"

namespace clima::thermo {

namespace {

constexpr double kKelvin = 273.15;
constexpr double kTableLow = -100.0;  // lower limit of the ice correlation
constexpr double kTableHigh = 200.0;

double over_ice(double t_db) {
  const double t = t_db + kKelvin;
  return std::exp(-5.6745359e3 / t + 6.3925247 - 9.677843e-3 * t + 6.2215701e-7 * t * t + 2.0747825e-9 * t * t * t -
                  9.484024e-13 * t * t * t * t + 4.1635019 * std::log(t));
}

double over_water(double t_db) {
  const double t = t_db + kKelvin;
  return std::exp(-5.8002206e3 / t + 1.3914993 - 4.8640239e-2 * t + 4.1764768e-5 * t * t - 1.4452093e-8 * t * t * t +
                  6.5459673 * std::log(t));
}

double saturation_unchecked(double t_db) { return t_db >= 0.0 ? over_water(t_db) : over_ice(t_db); }

void require_rh(double rh) {
  if (!(rh >= 0.0 && rh <= 100.0)) throw DomainError("relative humidity outside [0, 100]: " + std::to_string(rh));
}

// Saturation humidity ratio at the wet-bulb candidate.
double saturated_ratio(double t, double pressure) {
  const double pws = saturation_unchecked(t);
  if (pws >= pressure) throw DomainError("saturation pressure exceeds total pressure");
  return kMolarMassRatio * pws / (pressure - pws);
}

// Humidity ratio implied by an adiabatic-saturation process ending at t_star.
double adiabatic_ratio(double t_db, double t_star, double pressure) {
  const double ws = saturated_ratio(t_star, pressure);
  if (t_star >= 0.0) {
    return ((2501.0 - 2.326 * t_star) * ws - 1.006 * (t_db - t_star)) / (2501.0 + 1.86 * t_db - 4.186 * t_star);
  }
  return ((2830.0 - 0.24 * t_star) * ws - 1.006 * (t_db - t_star)) / (2830.0 + 1.86 * t_db - 2.1 * t_star);
}

}  // namespace

double saturation_vapor_pressure(double t_db) {
  if (!(t_db >= -60.0 && t_db <= 90.0)) {
    throw DomainError("saturation pressure: temperature outside [-60, 90] C: " + std::to_string(t_db));
  }
  return saturation_unchecked(t_db);
}

double saturation_vapor_pressure_over_water(double t_db) {
  if (!(t_db >= kTableLow && t_db <= kTableHigh)) throw DomainError("temperature outside [-100, 200] C");
  return over_water(t_db);
}

double vapor_pressure(double t_db, double rh) {
  require_rh(rh);
  return rh / 100.0 * saturation_vapor_pressure(t_db);
}

double humidity_ratio(double t_db, double rh, double pressure) {
  const double pw = vapor_pressure(t_db, rh);
  if (pw >= pressure) throw DomainError("vapour pressure not below total pressure");
  return kMolarMassRatio * pw / (pressure - pw);
}

double relative_humidity(double t_db, double w, double pressure) {
  if (w < 0.0) throw DomainError("negative humidity ratio");
  const double pw = pressure * w / (kMolarMassRatio + w);
  return 100.0 * pw / saturation_vapor_pressure(t_db);
}

double dew_point(double t_db, double rh) {
  if (!(rh > 0.0 && rh <= 100.0)) throw DomainError("dew point needs rh in (0, 100]");
  const double pw = vapor_pressure(t_db, rh);
  if (rh == 100.0) return t_db;
  double lo = kTableLow;
  double hi = t_db;
  if (pw < saturation_unchecked(lo)) throw DomainError("dew point below -100 C");
  // p_ws is monotone, so bisection on [lo, t_db] always converges.
  while (hi - lo > 1e-4) {
    const double mid = 0.5 * (lo + hi);
    if (saturation_unchecked(mid) < pw) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double wet_bulb(double t_db, double rh, double pressure) {
  const double w = humidity_ratio(t_db, rh, pressure);
  if (rh == 100.0) return t_db;
  double lo = rh > 0.0 ? dew_point(t_db, rh) : kTableLow;
  double hi = t_db;
  // adiabatic_ratio rises with t_star; the root lies where it meets w.
  while (hi - lo > 1e-4) {
    const double mid = 0.5 * (lo + hi);
    if (adiabatic_ratio(t_db, mid, pressure) > w) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double enthalpy(double t_db, double w) { return 1.006 * t_db + w * (2501.0 + 1.86 * t_db); }

double pressure_at_elevation(double elevation_m) {
  return kStandardPressure * std::pow(1.0 - 2.25577e-5 * elevation_m, 5.2559);
}

MoistAirState moist_air_state(double t_db, double rh, double pressure) {
  MoistAirState s;
  s.t_db = t_db;
  s.rh = rh;
  s.pressure = pressure;
  s.vapor_pressure = vapor_pressure(t_db, rh);
  s.humidity_ratio = humidity_ratio(t_db, rh, pressure);
  s.t_dp = rh > 0.0 ? dew_point(t_db, rh) : kTableLow;
  s.t_wb = wet_bulb(t_db, rh, pressure);
  s.enthalpy = enthalpy(t_db, s.humidity_ratio);
  return s;
}

}  // namespace clima::thermo
