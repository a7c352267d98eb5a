#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "clima/comfort.hpp"
#include "clima/error.hpp"
#include "clima/thermo.hpp"
#include "fixtures.hpp"

using namespace clima;
using namespace clima::comfort;

TEST(Utci, ReferencePointAndCategory) {
  const auto r = utci(20.0, 20.0, 0.5, 50.0);
  EXPECT_NEAR(r.value, 19.8, 0.1);  // reference implementation: 19.8
  EXPECT_EQ(r.category, StressCategory::NoStress);
  EXPECT_FALSE(r.clamped);
  EXPECT_EQ(utci(-45.0, -45.0, 10.0, 90.0).category, StressCategory::ExtremeCold);
}

TEST(Utci, LowWindIsClampedAndFlagged) {
  const auto low = utci(20.0, 25.0, 0.2, 50.0);
  const auto floor = utci(20.0, 25.0, 0.5, 50.0);
  EXPECT_TRUE(low.clamped);
  EXPECT_DOUBLE_EQ(low.value, floor.value);
  EXPECT_TRUE(utci(60.0, 60.0, 3.0, 10.0).clamped);
  EXPECT_TRUE(utci(20.0, 100.0, 3.0, 50.0).clamped);
  EXPECT_TRUE(utci(20.0, 20.0, 30.0, 50.0).clamped);
}

TEST(Utci, DomainErrors) {
  EXPECT_THROW(utci(std::numeric_limits<double>::quiet_NaN(), 20.0, 1.0, 50.0), DomainError);
  EXPECT_THROW(utci(20.0, 20.0, 1.0, 101.0), DomainError);
  EXPECT_THROW(utci(20.0, 20.0, 1.0, -1.0), DomainError);
}

TEST(UtciCategory, PublishedScaleBoundaries) {
  EXPECT_EQ(stress_category(20.0), StressCategory::NoStress);
  EXPECT_EQ(stress_category(46.0), StressCategory::VeryStrongHeat);
  EXPECT_EQ(stress_category(46.1), StressCategory::ExtremeHeat);
  EXPECT_EQ(stress_category(-40.0), StressCategory::ExtremeCold);
  EXPECT_EQ(stress_category(-39.9), StressCategory::VeryStrongCold);
  EXPECT_EQ(stress_category(-27.0), StressCategory::VeryStrongCold);
  EXPECT_EQ(stress_category(-13.0), StressCategory::StrongCold);
  EXPECT_EQ(stress_category(0.0), StressCategory::ModerateCold);
  EXPECT_EQ(stress_category(0.1), StressCategory::SlightCold);
  EXPECT_EQ(stress_category(9.0), StressCategory::SlightCold);
  EXPECT_EQ(stress_category(26.0), StressCategory::NoStress);
  EXPECT_EQ(stress_category(32.0), StressCategory::ModerateHeat);
  EXPECT_EQ(stress_category(38.0), StressCategory::StrongHeat);
  EXPECT_EQ(std::string(to_string(StressCategory::ExtremeHeat)), "extreme heat stress");
}

// The ten classes tile the line: each value lands in exactly one class and
// the class index is nondecreasing in the value.
TEST(UtciCategory, PartitionOfTheRealLine) {
  int prev = 0;
  int seen = 0;
  for (double v = -100.0; v <= 100.0; v += 0.001) {
    const int c = static_cast<int>(stress_category(v));
    ASSERT_GE(c, 0);
    ASSERT_LT(c, kCategoryCount);
    ASSERT_GE(c, prev) << v;
    if (c != prev) ++seen;
    prev = c;
  }
  EXPECT_EQ(seen, kCategoryCount - 1);
  for (std::size_t i = 0; i < kCategoryUpperBounds.size(); ++i) {
    const double b = kCategoryUpperBounds[i];
    EXPECT_EQ(static_cast<std::size_t>(stress_category(b)), i);
    EXPECT_EQ(static_cast<std::size_t>(stress_category(std::nextafter(b, 1e9))), i + 1);
  }
  EXPECT_EQ(stress_category(-1e300), StressCategory::ExtremeCold);
  EXPECT_EQ(stress_category(1e300), StressCategory::ExtremeHeat);
}

TEST(UtciOracle, AgreesWithReferenceImplementation) {
  const auto table = clima::testing::load_table("oracle/utci_reference.csv");
  ASSERT_EQ(table.rows.size(), 10000u);
  double sum = 0.0, worst = 0.0;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto r = utci(table.num(i, "t_db"), table.num(i, "t_r"), table.num(i, "wind10"), table.num(i, "rh"));
    EXPECT_FALSE(r.clamped) << i;
    const double d = std::abs(r.value - table.num(i, "utci"));
    sum += d;
    worst = std::max(worst, d);
    // category of the reference value under our scale equals the reference label
    EXPECT_EQ(std::string(to_string(stress_category(table.num(i, "utci")))), table.rows[i][table.index("category")]);
  }
  EXPECT_LT(sum / 10000.0, 0.1);
  EXPECT_LT(worst, 0.5);
}

TEST(UtciProperties, NondecreasingInRadiantAndAirTemperature) {
  for (double wind : {0.5, 3.0, 10.0}) {
    for (double rh : {20.0, 60.0}) {
      for (double t = -40.0; t <= 45.0; t += 5.0) {
        double prev = -1e9;
        for (double dtr = -30.0; dtr <= 70.0; dtr += 1.0) {
          const auto r = utci(t, t + dtr, wind, rh);
          if (r.clamped) continue;
          EXPECT_GE(r.value, prev - 0.05) << t << " " << dtr;
          prev = r.value;
        }
      }
      for (double dtr : {0.0, 20.0}) {
        double prev = -1e9;
        for (double t = -50.0; t <= 50.0; t += 0.5) {
          const auto r = utci(t, t + dtr, wind, rh);
          if (r.clamped) continue;
          EXPECT_GE(r.value, prev - 0.05) << t << " " << dtr;
          prev = r.value;
        }
      }
    }
  }
}

TEST(SolarMrt, ZeroWithoutSun) {
  EXPECT_EQ(solar_mrt_delta(0, 0, 0, 45), 0.0);
  EXPECT_EQ(solar_mrt_delta(800, 100, 700, -5), 0.0);
  EXPECT_EQ(solar_mrt_delta(800, 100, 700, 0), 0.0);
}

TEST(SolarMrt, MatchesHandEvaluation) {
  constexpr double f_eff = 0.725, alpha = 0.7, eps = 0.95, sigma = 5.67e-8, t_ref = 293.15;
  const double beta = 45.0;
  const double fp = 0.308 * std::cos(beta * (0.998 - beta * beta / 50000.0) * std::numbers::pi / 180.0);
  const double erf = f_eff * (alpha / eps) * (fp * 800.0 + 0.5 * 100.0);
  const double expected = erf / (f_eff * eps * sigma * 4.0 * t_ref * t_ref * t_ref);
  const double got = solar_mrt_delta(800, 100, 700, 45);
  EXPECT_GT(got, 0.0);
  EXPECT_NEAR(got, expected, 1e-9);
}

TEST(SolarMrt, ContinuousAndNonNegativeInAltitude) {
  double prev = solar_mrt_delta(600, 100, 500, 0.001);
  for (double a = 0.01; a <= 90.0; a += 0.01) {
    const double d = solar_mrt_delta(600, 100, 500, a);
    EXPECT_GE(d, 0.0);
    EXPECT_LT(std::abs(d - prev), 0.05) << a;
    prev = d;
  }
}

TEST(Scenarios, NightRowsCoincidePairwise) {
  ScenarioInputs row{12.0, 70.0, 4.0, 0.0, 0.0, 0.0, -20.0};
  const auto s = utci_scenarios(row);
  for (const auto& r : s) ASSERT_TRUE(r);
  EXPECT_DOUBLE_EQ(s[0]->value, s[2]->value);
  EXPECT_DOUBLE_EQ(s[1]->value, s[3]->value);
}

TEST(Scenarios, DaytimeOrdering) {
  ScenarioInputs row{30.0, 40.0, 3.0, 700.0, 120.0, 800.0, 60.0};
  const auto s = utci_scenarios(row);
  for (const auto& r : s) ASSERT_TRUE(r);
  // order: sun_wind, sun_nowind, nosun_wind, nosun_nowind
  EXPECT_GE(s[1]->value, s[3]->value);
  EXPECT_GE(s[0]->value, s[2]->value);
  EXPECT_GE(s[1]->value, s[0]->value);
  EXPECT_GE(s[3]->value, s[2]->value);
  EXPECT_EQ(scenario_key(s[0]->scenario), "sun_wind");
  EXPECT_EQ(scenario_key(s[3]->scenario), "nosun_nowind");
}

TEST(Scenarios, AbsentInputsPropagate) {
  ScenarioInputs no_t{std::nullopt, 50.0, 3.0, 100.0, 100.0, 100.0, 30.0};
  for (const auto& r : utci_scenarios(no_t)) EXPECT_FALSE(r);
  ScenarioInputs no_wind{20.0, 50.0, std::nullopt, 100.0, 100.0, 100.0, 30.0};
  const auto s = utci_scenarios(no_wind);
  EXPECT_FALSE(s[0]);
  EXPECT_TRUE(s[1]);
  EXPECT_FALSE(s[2]);
  EXPECT_TRUE(s[3]);
}

TEST(Scenarios, CalmWindEqualsNoWind) {
  ScenarioInputs row{25.0, 50.0, 0.3, 500.0, 100.0, 600.0, 40.0};
  const auto s = utci_scenarios(row);
  EXPECT_DOUBLE_EQ(s[0]->value, s[1]->value);
  EXPECT_DOUBLE_EQ(s[2]->value, s[3]->value);
}

TEST(RunningMean, ConstantSeriesIsFixedPoint) {
  const std::vector<double> daily(365, 20.0);
  const auto rm = running_mean(daily);
  ASSERT_EQ(rm.size(), daily.size());
  for (double v : rm) EXPECT_EQ(v, 20.0);
}

TEST(RunningMean, SevenTermHandEvaluation) {
  // t(d-1..d-7) = 10,10,10,10,10,10,30 for day index 7
  std::vector<double> daily(20, 10.0);
  daily[0] = 30.0;
  const auto rm = running_mean(daily, 0.9);
  double num = 0.0, den = 0.0;
  for (int i = 1; i <= 7; ++i) {
    const double w = std::pow(0.9, i - 1);
    num += w * (i == 7 ? 30.0 : 10.0);
    den += w;
  }
  EXPECT_NEAR(rm[7], num / den, 1e-12);
  EXPECT_NEAR(rm[7], 12.0373, 0.0001);
}

TEST(RunningMean, CyclicStartAndShiftCovariance) {
  std::vector<double> daily(365);
  for (std::size_t d = 0; d < daily.size(); ++d) daily[d] = 10.0 + 8.0 * std::sin(d / 58.0);
  const auto rm = running_mean(daily);
  // day 0 looks back at days 364..358
  double num = 0.0, den = 0.0;
  for (int i = 1; i <= 7; ++i) {
    num += std::pow(0.9, i - 1) * daily[365 - i];
    den += std::pow(0.9, i - 1);
  }
  EXPECT_NEAR(rm[0], num / den, 1e-12);

  auto shifted = daily;
  for (auto& v : shifted) v += 1.0;
  const auto rm2 = running_mean(shifted);
  for (std::size_t d = 0; d < rm.size(); ++d) {
    EXPECT_EQ(rm2[d] - rm[d], 1.0);
    EXPECT_NEAR(adaptive_band(rm2[d]).t_comf - adaptive_band(rm[d]).t_comf, 0.31, 1e-12);
  }
}

TEST(RunningMean, Preconditions) {
  const std::vector<double> short_series(7, 1.0);
  EXPECT_THROW(running_mean(short_series), DomainError);
  const std::vector<double> ok(8, 1.0);
  EXPECT_THROW(running_mean(ok, 0.0), DomainError);
  EXPECT_THROW(running_mean(ok, 1.0), DomainError);
  EXPECT_NO_THROW(running_mean(ok, 0.5));
}

TEST(RunningMean, AbsentDaysPoisonDependents) {
  std::vector<std::optional<double>> daily(30, 15.0);
  daily[10].reset();
  const auto rm = running_mean(daily);
  for (std::size_t d = 0; d < rm.size(); ++d) {
    const bool depends = d >= 11 && d <= 17;
    EXPECT_EQ(rm[d].has_value(), !depends) << d;
  }
}

TEST(DailyMeans, ExcludesAbsentHoursAndPoisonsSparseDays) {
  std::vector<std::optional<double>> hourly(48, 10.0);
  for (int h = 0; h < 6; ++h) hourly[h].reset();
  hourly[6] = 28.0;
  for (int h = 24; h < 31; ++h) hourly[h].reset();
  const auto d = daily_means(hourly);
  ASSERT_EQ(d.size(), 2u);
  ASSERT_TRUE(d[0]);
  EXPECT_NEAR(*d[0], (28.0 + 17 * 10.0) / 18.0, 1e-12);
  EXPECT_FALSE(d[1]);
}

TEST(AdaptiveBand, FormulaAndWidths) {
  const auto b = adaptive_band(20.0);
  EXPECT_EQ(b.t_comf, 24.0);
  EXPECT_EQ(b.lower_90, 21.5);
  EXPECT_EQ(b.upper_90, 26.5);
  EXPECT_EQ(b.lower_80, 20.5);
  EXPECT_EQ(b.upper_80, 27.5);
  EXPECT_TRUE(b.applicable);
  EXPECT_FALSE(adaptive_band(5.0).applicable);
  EXPECT_TRUE(adaptive_band(10.0).applicable);
  EXPECT_TRUE(adaptive_band(33.5).applicable);
  EXPECT_FALSE(adaptive_band(33.6).applicable);
  for (double t = -20.0; t <= 45.0; t += 0.37) {
    const auto a = adaptive_band(t);
    EXPECT_EQ(a.upper_80 - a.lower_80, 7.0) << t;
    EXPECT_EQ(a.upper_90 - a.lower_90, 5.0) << t;
    EXPECT_GE(a.lower_90, a.lower_80);
    EXPECT_LE(a.upper_90, a.upper_80);
    EXPECT_NEAR((a.upper_80 + a.lower_80) / 2, a.t_comf, 1e-12);
  }
}
