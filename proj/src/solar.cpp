#include "clima/solar.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "clima/calendar.hpp"
#include "clima/error.hpp"

namespace clima::solar {

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

double rad(double deg) { return deg * kDeg; }
double deg(double rad) { return rad / kDeg; }

double wrap360(double a) {
  double r = std::fmod(a, 360.0);
  if (r < 0.0) r += 360.0;
  if (r >= 360.0) r -= 360.0;
  return r;
}

// Julian day at 0h UT of a Gregorian calendar date.
double julian_day(int year, int month, int day) {
  if (month <= 2) {
    year -= 1;
    month += 12;
  }
  const int a = year / 100;
  const int b = 2 - a + a / 4;
  return std::floor(365.25 * (year + 4716)) + std::floor(30.6001 * (month + 1)) + day + b - 1524.5;
}

}  // namespace

double refraction_correction(double e) {
  if (e > 85.0) return 0.0;
  double arcsec = 0.0;
  if (e > 5.0) {
    const double t = std::tan(rad(e));
    arcsec = 58.1 / t - 0.07 / (t * t * t) + 0.000086 / std::pow(t, 5);
  } else if (e > -0.575) {
    arcsec = 1735.0 + e * (-518.2 + e * (103.4 + e * (-12.79 + e * 0.711)));
  } else {
    return 0.0;
  }
  return arcsec / 3600.0;
}

SolarPosition solar_position_at(const epw::Location& location, int year, int month, int day, double local_hour) {
  if (year < 1900 || year > 2100) throw DomainError("solar position supported for years 1900..2100, got " + std::to_string(year));
  const double ut_hours = local_hour - location.timezone;
  const double jd = julian_day(year, month, day) + ut_hours / 24.0;
  const double t = (jd - 2451545.0) / 36525.0;

  // Low-order solar coordinates (Meeus, as used by the NOAA calculator).
  const double l0 = wrap360(280.46646 + t * (36000.76983 + 0.0003032 * t));
  const double m = 357.52911 + t * (35999.05029 - 0.0001537 * t);
  const double ecc = 0.016708634 - t * (0.000042037 + 0.0000001267 * t);
  const double center = std::sin(rad(m)) * (1.914602 - t * (0.004817 + 0.000014 * t)) +
                        std::sin(rad(2 * m)) * (0.019993 - 0.000101 * t) + std::sin(rad(3 * m)) * 0.000289;
  const double true_long = l0 + center;
  const double omega = 125.04 - 1934.136 * t;
  const double app_long = true_long - 0.00569 - 0.00478 * std::sin(rad(omega));
  const double eps0 = 23.0 + (26.0 + (21.448 - t * (46.815 + t * (0.00059 - t * 0.001813))) / 60.0) / 60.0;
  const double eps = eps0 + 0.00256 * std::cos(rad(omega));
  const double decl = std::asin(std::sin(rad(eps)) * std::sin(rad(app_long)));

  const double y = std::pow(std::tan(rad(eps / 2.0)), 2);
  const double eot_min =
      4.0 * deg(y * std::sin(2 * rad(l0)) - 2 * ecc * std::sin(rad(m)) +
                4 * ecc * y * std::sin(rad(m)) * std::cos(2 * rad(l0)) - 0.5 * y * y * std::sin(4 * rad(l0)) -
                1.25 * ecc * ecc * std::sin(2 * rad(m)));

  const double true_solar_min = local_hour * 60.0 + eot_min + 4.0 * location.longitude - 60.0 * location.timezone;
  double hour_angle = true_solar_min / 4.0 - 180.0;
  hour_angle = wrap360(hour_angle + 180.0) - 180.0;

  const double lat = rad(location.latitude);
  const double ha = rad(hour_angle);
  double cos_zen = std::sin(lat) * std::sin(decl) + std::cos(lat) * std::cos(decl) * std::cos(ha);
  cos_zen = std::clamp(cos_zen, -1.0, 1.0);
  const double geometric_alt = 90.0 - deg(std::acos(cos_zen));
  const double az = deg(std::atan2(std::sin(ha), std::cos(ha) * std::sin(lat) - std::tan(decl) * std::cos(lat))) + 180.0;

  SolarPosition pos;
  pos.altitude = std::min(90.0, geometric_alt + refraction_correction(geometric_alt));
  pos.azimuth = wrap360(az);
  pos.timestamp = {year, month, day, static_cast<int>(std::ceil(local_hour))};
  return pos;
}

SolarPosition solar_position(const epw::Location& location, const Timestamp& ts) {
  auto pos = solar_position_at(location, ts.year, ts.month, ts.day, ts.hour - 0.5);
  pos.timestamp = ts;
  return pos;
}

std::vector<SolarPosition> annual_sun_path(const epw::Location& location, int year) {
  const bool leap = calendar::is_leap(year);
  std::vector<SolarPosition> out;
  out.reserve(leap ? 8784 : 8760);
  for (int month = 1; month <= 12; ++month) {
    for (int day = 1; day <= calendar::days_in_month(month, leap); ++day) {
      for (int hour = 1; hour <= 24; ++hour) out.push_back(solar_position(location, {year, month, day, hour}));
    }
  }
  return out;
}

std::pair<double, double> project(const SolarPosition& p, Projection mode) {
  if (mode == Projection::Spherical) return {90.0 - p.altitude, p.azimuth};
  return {p.azimuth, p.altitude};
}

}  // namespace clima::solar
