#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "clima/error.hpp"
#include "clima/solar.hpp"
#include "fixtures.hpp"

using namespace clima;
using namespace clima::solar;

namespace {

epw::Location site(double lat, double lon, double tz) {
  epw::Location l;
  l.latitude = lat;
  l.longitude = lon;
  l.timezone = tz;
  return l;
}

double rad(double d) { return d * std::numbers::pi / 180.0; }

// Great-circle separation of two sky directions in degrees.
double separation(double alt1, double az1, double alt2, double az2) {
  const double c = std::sin(rad(alt1)) * std::sin(rad(alt2)) +
                   std::cos(rad(alt1)) * std::cos(rad(alt2)) * std::cos(rad(az1 - az2));
  return std::acos(std::clamp(c, -1.0, 1.0)) * 180.0 / std::numbers::pi;
}

}  // namespace

TEST(Solar, EquatorEquinoxNoonIsNearZenith) {
  double best = -90.0;
  for (double h = 11.5; h <= 12.5; h += 0.01) {
    best = std::max(best, solar_position_at(site(0, 0, 0), 2021, 3, 20, h).altitude);
  }
  EXPECT_GE(best, 88.0);
}

TEST(Solar, MidLatitudeNightIsBelowHorizon) {
  for (double lat : {-50.0, -30.0, 30.0, 45.0, 60.0}) {
    const auto p = solar_position(site(lat, 10, 1), Timestamp{2021, 1, 15, 1});  // 00:30 local
    EXPECT_LT(p.altitude, 0.0) << lat;
  }
}

TEST(Solar, NoonAzimuthAtLatitude45IsSouth) {
  // local solar noon on the central meridian of the zone, equation of time aside
  double best_alt = -90.0, az_at_best = 0.0;
  for (double h = 11.0; h <= 13.0; h += 0.01) {
    const auto p = solar_position_at(site(45, 15, 1), 2021, 6, 10, h);
    if (p.altitude > best_alt) {
      best_alt = p.altitude;
      az_at_best = p.azimuth;
    }
  }
  EXPECT_NEAR(az_at_best, 180.0, 2.0);
}

TEST(Solar, YearsOutsideSupportedRangeThrow) {
  EXPECT_THROW(solar_position(site(45, 0, 0), Timestamp{1899, 6, 1, 12}), DomainError);
  EXPECT_THROW(solar_position(site(45, 0, 0), Timestamp{2101, 6, 1, 12}), DomainError);
  EXPECT_NO_THROW(solar_position(site(45, 0, 0), Timestamp{1900, 6, 1, 12}));
  EXPECT_NO_THROW(solar_position(site(45, 0, 0), Timestamp{2100, 6, 1, 12}));
}

TEST(Solar, EvaluatedAtHourMidpoint) {
  const auto loc = site(52, 5, 1);
  const auto a = solar_position(loc, Timestamp{2021, 5, 1, 13});
  const auto b = solar_position_at(loc, 2021, 5, 1, 12.5);
  EXPECT_DOUBLE_EQ(a.altitude, b.altitude);
  EXPECT_DOUBLE_EQ(a.azimuth, b.azimuth);
}

TEST(Solar, AnnualSunPathLengthAndAlignment) {
  const auto& frame = clima::testing::reference_frame("NLD_Amsterdam062400_IWEC.epw");
  const auto path = annual_sun_path(frame.location(), frame.reference_year());
  ASSERT_EQ(path.size(), 8760u);
  EXPECT_EQ(annual_sun_path(frame.location(), 2004).size(), 8784u);
  const auto& alt = frame.values("solar_altitude");
  for (std::size_t i = 0; i < path.size(); ++i) {
    EXPECT_EQ(path[i].timestamp.month, frame.months()[i]);
    EXPECT_EQ(path[i].timestamp.day, frame.days()[i]);
    EXPECT_EQ(path[i].timestamp.hour, frame.hours()[i]);
    ASSERT_TRUE(alt[i]);
    EXPECT_EQ(*alt[i], path[i].altitude);
  }
}

TEST(Solar, AltitudeEnvelopeAtLatitude52) {
  const auto path = annual_sun_path(site(52, 0, 0), 2021);
  const double envelope = 90.0 - std::abs(52.0 - 23.44) + 0.6;
  double top = -90.0;
  for (const auto& p : path) {
    EXPECT_LE(p.altitude, envelope);
    EXPECT_GE(p.azimuth, 0.0);
    EXPECT_LT(p.azimuth, 360.0);
    top = std::max(top, p.altitude);
  }
  EXPECT_GT(top, envelope - 1.5);
}

TEST(Solar, EastWestSymmetryOnEquinox) {
  const auto loc = site(40, 0, 0);
  // find solar noon numerically, then compare symmetric offsets
  double noon = 12.0, best = -90.0;
  for (double h = 11.5; h <= 12.5; h += 0.001) {
    const double a = solar_position_at(loc, 2021, 3, 20, h).altitude;
    if (a > best) {
      best = a;
      noon = h;
    }
  }
  for (double d = 0.5; d <= 5.0; d += 0.5) {
    EXPECT_NEAR(solar_position_at(loc, 2021, 3, 20, noon - d).altitude,
                solar_position_at(loc, 2021, 3, 20, noon + d).altitude, 0.3)
        << d;
  }
}

TEST(Solar, Projection) {
  SolarPosition zenith{90.0, 123.0, {}};
  EXPECT_DOUBLE_EQ(project(zenith, Projection::Spherical).first, 0.0);
  SolarPosition p{30.0, 180.0, {}};
  const auto [x, y] = project(p, Projection::Cartesian);
  EXPECT_DOUBLE_EQ(x, 180.0);
  EXPECT_DOUBLE_EQ(y, 30.0);
  double prev = 1e9;
  for (double alt = -5.0; alt <= 90.0; alt += 0.5) {
    const double r = project(SolarPosition{alt, 10.0, {}}, Projection::Spherical).first;
    EXPECT_LT(r, prev);
    prev = r;
  }
}

TEST(Solar, RefractionIsSmallAndPositiveNearHorizon) {
  EXPECT_GT(refraction_correction(0.0), 0.4);
  EXPECT_LT(refraction_correction(0.0), 0.7);
  EXPECT_LT(refraction_correction(45.0), 0.02);
  EXPECT_GE(refraction_correction(45.0), 0.0);
}

// Frozen NREL SPA (pvlib) apparent positions at hour midpoints.
TEST(SolarOracle, AgreesWithSpa) {
  const auto table = clima::testing::load_table("oracle/solar_reference.csv");
  ASSERT_EQ(table.rows.size(), 1000u);
  double sum_sq = 0.0, worst = 0.0;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto loc = site(table.num(i, "latitude"), table.num(i, "longitude"), table.num(i, "timezone"));
    const Timestamp ts{static_cast<int>(table.num(i, "year")), static_cast<int>(table.num(i, "month")),
                       static_cast<int>(table.num(i, "day")), static_cast<int>(table.num(i, "hour"))};
    const auto p = solar_position(loc, ts);
    const double err = separation(p.altitude, p.azimuth, table.num(i, "altitude"), table.num(i, "azimuth"));
    sum_sq += err * err;
    worst = std::max(worst, err);
  }
  const double rms = std::sqrt(sum_sq / static_cast<double>(table.rows.size()));
  EXPECT_LT(rms, 0.5);
  EXPECT_LT(worst, 1.0);
}
