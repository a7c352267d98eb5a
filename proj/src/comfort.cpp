#include "clima/comfort.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "clima/error.hpp"
#include "clima/thermo.hpp"
#include "utci_polynomial.hpp"

namespace clima::comfort {

namespace {

// Solar gain on a standing person.
constexpr double kEffectiveRadiatingArea = 0.725;
constexpr double kShortwaveAbsorptivity = 0.7;
constexpr double kEmissivity = 0.95;
constexpr double kStefanBoltzmann = 5.67e-8;
constexpr double kReferenceTemperature = 293.15;  // K, linearisation point

constexpr double kMinWind = 0.5;

}  // namespace

std::string_view to_string(StressCategory c) {
  switch (c) {
    case StressCategory::ExtremeCold: return "extreme cold stress";
    case StressCategory::VeryStrongCold: return "very strong cold stress";
    case StressCategory::StrongCold: return "strong cold stress";
    case StressCategory::ModerateCold: return "moderate cold stress";
    case StressCategory::SlightCold: return "slight cold stress";
    case StressCategory::NoStress: return "no thermal stress";
    case StressCategory::ModerateHeat: return "moderate heat stress";
    case StressCategory::StrongHeat: return "strong heat stress";
    case StressCategory::VeryStrongHeat: return "very strong heat stress";
    case StressCategory::ExtremeHeat: return "extreme heat stress";
  }
  return "";
}

StressCategory stress_category(double value) {
  int idx = 0;
  while (idx < static_cast<int>(kCategoryUpperBounds.size()) && value > kCategoryUpperBounds[static_cast<std::size_t>(idx)]) ++idx;
  return static_cast<StressCategory>(idx);
}

std::string_view scenario_key(const Scenario& s) {
  if (s.sun) return s.wind ? "sun_wind" : "sun_nowind";
  return s.wind ? "nosun_wind" : "nosun_nowind";
}

double utci_polynomial(double t_db, double wind10, double dtr, double pa) {
  // Powers 0..6 of each variable, then one multiply-add per term.
  std::array<std::array<double, 7>, 4> pw{};
  const std::array<double, 4> base{t_db, wind10, dtr, pa};
  for (std::size_t v = 0; v < 4; ++v) {
    pw[v][0] = 1.0;
    for (std::size_t k = 1; k < 7; ++k) pw[v][k] = pw[v][k - 1] * base[v];
  }
  double sum = 0.0;
  for (const auto& term : detail::kUtciTerms) {
    sum += term.coef * pw[0][static_cast<std::size_t>(term.ta)] * pw[1][static_cast<std::size_t>(term.va)] *
           pw[2][static_cast<std::size_t>(term.dtr)] * pw[3][static_cast<std::size_t>(term.pa)];
  }
  return t_db + sum;
}

UtciResult utci(double t_db, double t_r, double wind10, double rh) {
  if (!std::isfinite(t_db) || !std::isfinite(t_r) || !std::isfinite(wind10)) {
    throw DomainError("UTCI needs finite air temperature, radiant temperature and wind");
  }
  if (!(rh >= 0.0 && rh <= 100.0)) throw DomainError("UTCI needs rh in [0, 100]");
  bool clamped = false;
  auto clip = [&clamped](double v, double lo, double hi) {
    const double c = std::clamp(v, lo, hi);
    if (c != v) clamped = true;
    return c;
  };
  const double ta = clip(t_db, -50.0, 50.0);
  const double va = clip(wind10, kMinWind, 17.0);
  const double dtr = clip(t_r - t_db, -30.0, 70.0);
  const double pa = clip(thermo::saturation_vapor_pressure_over_water(ta) * rh / 100.0 / 1000.0, 0.0, 5.0);

  UtciResult r;
  r.value = utci_polynomial(ta, va, dtr, pa);
  r.category = stress_category(r.value);
  r.clamped = clamped;
  return r;
}

double projected_area_factor(double altitude) {
  const double a = std::clamp(altitude, 0.0, 90.0);
  return 0.308 * std::cos(a * (0.998 - a * a / 50000.0) * std::numbers::pi / 180.0);
}

double solar_mrt_delta(double dni, double dhi, double ghi, double altitude) {
  if (altitude <= 0.0 || ghi <= 0.0) return 0.0;
  const double fp = projected_area_factor(altitude);
  const double erf = kEffectiveRadiatingArea * (kShortwaveAbsorptivity / kEmissivity) *
                     (fp * std::max(dni, 0.0) + 0.5 * std::max(dhi, 0.0));
  const double hr = kEffectiveRadiatingArea * kEmissivity * kStefanBoltzmann * 4.0 * std::pow(kReferenceTemperature, 3);
  return std::max(0.0, erf / hr);
}

std::array<std::optional<UtciResult>, 4> utci_scenarios(const ScenarioInputs& row) {
  std::array<std::optional<UtciResult>, 4> out{};
  if (!row.t_db || !row.rh) return out;
  std::optional<double> delta;
  if (row.dni && row.dhi && row.ghi) delta = solar_mrt_delta(*row.dni, *row.dhi, *row.ghi, row.solar_altitude);
  for (std::size_t i = 0; i < kScenarios.size(); ++i) {
    const auto& s = kScenarios[i];
    if (s.sun && !delta) continue;
    if (s.wind && !row.wind_speed) continue;
    const double t_r = *row.t_db + (s.sun ? *delta : 0.0);
    const double wind = s.wind ? *row.wind_speed : kMinWind;
    auto r = utci(*row.t_db, t_r, wind, *row.rh);
    r.scenario = s;
    out[i] = r;
  }
  return out;
}

AdaptiveBand adaptive_band(double t_rm) {
  AdaptiveBand b;
  b.t_rm = t_rm;
  // Snapped to a 2^-40 K grid so that t_comf +- 3.5 and +- 2.5 are exact and
  // the band widths come out as exactly 7 and 5.
  b.t_comf = std::ldexp(std::round(std::ldexp(0.31 * t_rm + 17.8, 40)), -40);
  b.lower_80 = b.t_comf - 3.5;
  b.upper_80 = b.t_comf + 3.5;
  b.lower_90 = b.t_comf - 2.5;
  b.upper_90 = b.t_comf + 2.5;
  b.applicable = t_rm >= 10.0 && t_rm <= 33.5;
  return b;
}

namespace {

constexpr std::size_t kWindow = 7;

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("running mean alpha must lie in (0, 1)");
}

std::array<double, kWindow> weights(double alpha) {
  std::array<double, kWindow> w{};
  double sum = 0.0;
  double p = 1.0;
  for (auto& x : w) {
    x = p;
    sum += p;
    p *= alpha;
  }
  for (auto& x : w) x /= sum;
  return w;
}

}  // namespace

namespace {

// Values are carried on a 2^-40 K grid. Differences and the final sum are then
// exact, so adding a constant to every day adds exactly that constant to the
// result. A window without variation returns its anchor untouched.
double on_grid(double v) { return std::ldexp(std::nearbyint(std::ldexp(v, 40)), -40); }

// Weighted mean of the seven days before `d`, anchored on the previous day.
// Returns nullopt when any of them is absent.
template <typename Get>
std::optional<double> anchored_mean(Get get, std::size_t d, std::size_t n, const std::array<double, kWindow>& w) {
  const auto anchor = get((d + n - 1) % n);
  if (!anchor) return std::nullopt;
  const double a = on_grid(*anchor);
  double acc = 0.0;
  for (std::size_t i = 2; i <= kWindow; ++i) {
    const auto v = get((d + n - i) % n);
    if (!v) return std::nullopt;
    acc += w[i - 1] * (on_grid(*v) - a);
  }
  if (acc == 0.0) return *anchor;
  return a + on_grid(acc);
}

}  // namespace

std::vector<double> running_mean(std::span<const double> daily, double alpha) {
  check_alpha(alpha);
  if (daily.size() <= kWindow) throw DomainError("running mean needs at least 8 daily values");
  const auto w = weights(alpha);
  const std::size_t n = daily.size();
  std::vector<double> out(n);
  const auto get = [&](std::size_t i) { return std::optional<double>(daily[i]); };
  for (std::size_t d = 0; d < n; ++d) out[d] = *anchored_mean(get, d, n, w);
  return out;
}

std::vector<std::optional<double>> running_mean(std::span<const std::optional<double>> daily, double alpha) {
  check_alpha(alpha);
  if (daily.size() <= kWindow) throw DomainError("running mean needs at least 8 daily values");
  const auto w = weights(alpha);
  const std::size_t n = daily.size();
  std::vector<std::optional<double>> out(n);
  const auto get = [&](std::size_t i) { return daily[i]; };
  for (std::size_t d = 0; d < n; ++d) out[d] = anchored_mean(get, d, n, w);
  return out;
}

std::vector<std::optional<double>> daily_means(std::span<const std::optional<double>> hourly, int max_absent) {
  const std::size_t days = hourly.size() / 24;
  std::vector<std::optional<double>> out(days);
  for (std::size_t d = 0; d < days; ++d) {
    double sum = 0.0;
    int present = 0;
    for (std::size_t h = 0; h < 24; ++h) {
      if (const auto& v = hourly[d * 24 + h]) {
        sum += *v;
        ++present;
      }
    }
    if (24 - present <= max_absent && present > 0) out[d] = sum / present;
  }
  return out;
}

}  // namespace clima::comfort
