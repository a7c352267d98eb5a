#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace clima::comfort {

/// The ten UTCI assessment classes, coldest first.
enum class StressCategory {
  ExtremeCold,
  VeryStrongCold,
  StrongCold,
  ModerateCold,
  SlightCold,
  NoStress,
  ModerateHeat,
  StrongHeat,
  VeryStrongHeat,
  ExtremeHeat,
};

inline constexpr int kCategoryCount = 10;

/// Upper bounds (inclusive) of the first nine classes in C.
inline constexpr std::array<double, 9> kCategoryUpperBounds{-40.0, -27.0, -13.0, 0.0, 9.0, 26.0, 32.0, 38.0, 46.0};

std::string_view to_string(StressCategory c);
StressCategory stress_category(double utci_value);

struct Scenario {
  bool sun = false;
  bool wind = false;

  bool operator==(const Scenario&) const = default;
};

/// Scenario order used throughout the frame and API.
inline constexpr std::array<Scenario, 4> kScenarios{{{true, true}, {true, false}, {false, true}, {false, false}}};
std::string_view scenario_key(const Scenario& s);  // e.g. "sun_nowind"

struct UtciResult {
  double value = 0.0;
  StressCategory category = StressCategory::NoStress;
  Scenario scenario;
  bool clamped = false;
};

/// Raw regression: t_db in C, wind at 10 m in m/s, dtr = t_r - t_db in K,
/// pa vapour pressure in kPa. No domain handling.
double utci_polynomial(double t_db, double wind10, double dtr, double pa_kpa);

/// UTCI with inputs clipped into the regression's validity domain
/// (t_db in [-50, 50], wind in [0.5, 17], t_r - t_db in [-30, 70], pa <= 5 kPa).
/// Throws DomainError for a non-finite t_db or rh outside [0, 100].
UtciResult utci(double t_db, double t_r, double wind10, double rh);

/// Projected-area factor of a standing person for a solar altitude in degrees.
double projected_area_factor(double altitude);

/// Mean radiant temperature increase (K) of a standing person in the sun.
/// Zero at night (altitude <= 0 or no global radiation).
double solar_mrt_delta(double dni, double dhi, double ghi, double altitude);

struct ScenarioInputs {
  std::optional<double> t_db;
  std::optional<double> rh;
  std::optional<double> wind_speed;
  std::optional<double> dni;
  std::optional<double> dhi;
  std::optional<double> ghi;
  double solar_altitude = -90.0;
};

/// All four exposure scenarios in kScenarios order. An entry is absent when
/// one of the inputs it needs is absent.
std::array<std::optional<UtciResult>, 4> utci_scenarios(const ScenarioInputs& row);

struct AdaptiveBand {
  double t_rm = 0.0;
  double t_comf = 0.0;
  double lower_80 = 0.0;
  double upper_80 = 0.0;
  double lower_90 = 0.0;
  double upper_90 = 0.0;
  bool applicable = false;
};

inline constexpr double kDefaultRunningMeanAlpha = 0.9;

AdaptiveBand adaptive_band(double t_rm);

/// Prevailing mean outdoor temperature per day from the previous seven daily
/// means, weighted alpha^(i-1). The series is treated as cyclic.
std::vector<double> running_mean(std::span<const double> daily_means, double alpha = kDefaultRunningMeanAlpha);

/// As above; a day is absent when any of its seven predecessors is absent.
std::vector<std::optional<double>> running_mean(std::span<const std::optional<double>> daily_means,
                                                double alpha = kDefaultRunningMeanAlpha);

/// Daily means from consecutive 24-hour blocks; a day with more than
/// `max_absent` absent hours has no mean.
std::vector<std::optional<double>> daily_means(std::span<const std::optional<double>> hourly, int max_absent = 6);

}  // namespace clima::comfort
