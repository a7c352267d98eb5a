#pragma once

#include <utility>
#include <vector>

#include "clima/epw.hpp"

namespace clima::solar {

/// Local standard time stamp. `hour` follows the EPW label convention
/// (1..24); positions are evaluated at the interval midpoint hour - 0.5.
struct Timestamp {
  int year = 2001;
  int month = 1;
  int day = 1;
  int hour = 1;

  bool operator==(const Timestamp&) const = default;
};

struct SolarPosition {
  double altitude = 0.0;  // degrees above horizon, refraction corrected
  double azimuth = 0.0;   // degrees clockwise from north, [0, 360)
  Timestamp timestamp;
};

/// Position at an arbitrary local standard time (decimal hours, 0..24).
SolarPosition solar_position_at(const epw::Location& location, int year, int month, int day, double local_hour);

/// Position for an EPW-labelled hour. DomainError outside years 1900..2100.
SolarPosition solar_position(const epw::Location& location, const Timestamp& timestamp);

/// One position per hour of `year` (8760 or 8784), in EPW row order.
std::vector<SolarPosition> annual_sun_path(const epw::Location& location, int year);

enum class Projection { Spherical, Cartesian };

/// Spherical: (radius = 90 - altitude, angle = azimuth), north up, clockwise.
/// Cartesian: (x = azimuth, y = altitude).
std::pair<double, double> project(const SolarPosition& position, Projection mode);

/// Apparent-altitude refraction correction in degrees for a geometric altitude.
double refraction_correction(double geometric_altitude);

}  // namespace clima::solar
