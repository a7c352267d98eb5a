#pragma once

// Moist-air psychrometrics. Saturation pressure uses the ASHRAE
// Hyland-Wexler correlations: over liquid water at or above 0 C, over ice below.

namespace clima::thermo {

inline constexpr double kStandardPressure = 101325.0;  // Pa
inline constexpr double kMolarMassRatio = 0.621945;    // water / dry air

/// Pa. Domain t_db in [-60, 90] C; DomainError outside.
double saturation_vapor_pressure(double t_db);

/// Pa, liquid-water branch for all temperatures (valid -100..200 C). This is
/// the formulation the UTCI regression was fitted against.
double saturation_vapor_pressure_over_water(double t_db);

/// kg_water / kg_dry_air.
double humidity_ratio(double t_db, double rh, double pressure);

/// Relative humidity in % from a humidity ratio; inverse of humidity_ratio.
double relative_humidity(double t_db, double humidity_ratio, double pressure);

/// Pa, partial pressure of water vapour.
double vapor_pressure(double t_db, double rh);

/// C. rh in (0, 100]; solved to better than 0.02 K.
double dew_point(double t_db, double rh);

/// Thermodynamic wet-bulb temperature, C, by bisection between dew point and dry bulb.
double wet_bulb(double t_db, double rh, double pressure);

/// kJ / kg_dry_air.
double enthalpy(double t_db, double humidity_ratio);

/// Standard-atmosphere station pressure for an elevation in metres.
double pressure_at_elevation(double elevation_m);

struct MoistAirState {
  double t_db = 0.0;
  double rh = 0.0;
  double pressure = kStandardPressure;
  double humidity_ratio = 0.0;
  double t_dp = 0.0;
  double t_wb = 0.0;
  double enthalpy = 0.0;
  double vapor_pressure = 0.0;
};

/// Full state from dry bulb, relative humidity and pressure. rh = 0 gives a
/// dew point at the lower edge of the saturation table.
MoistAirState moist_air_state(double t_db, double rh, double pressure);

}  // namespace clima::thermo
