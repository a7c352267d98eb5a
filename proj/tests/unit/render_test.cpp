#include <gtest/gtest.h>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <regex>
#include <sstream>

#include "clima/error.hpp"
#include "clima/render.hpp"
#include "digest.hpp"
#include "fixtures.hpp"

using namespace clima;
using namespace clima::render;
using clima::testing::kReferenceFiles;
using clima::testing::reference_frame;

namespace {

boost::property_tree::ptree parse_xml(const std::string& text) {
  std::istringstream in(text);
  boost::property_tree::ptree tree;
  boost::property_tree::read_xml(in, tree);
  return tree;
}

SvgDocument draw(const analytics::ClimateFrame& f, const ChartRequest& r) { return clima::render::render(f, r); }

ChartRequest request(ChartKind kind) {
  ChartRequest r;
  r.kind = kind;
  return r;
}

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST(Render, EveryKindIsWellFormedSvg) {
  for (const auto& name : kReferenceFiles) {
    const auto& f = reference_frame(name);
    for (auto kind : kAllChartKinds) {
      auto req = request(kind);
      req.width = 800;
      req.height = 500;
      const auto doc = draw(f, req);
      ASSERT_NO_THROW({
        const auto tree = parse_xml(doc.text);
        const auto& root = tree.get_child("svg");
        EXPECT_EQ(root.get<std::string>("<xmlattr>.width"), "800");
        EXPECT_EQ(root.get<std::string>("<xmlattr>.height"), "500");
        EXPECT_EQ(root.get<std::string>("<xmlattr>.xmlns"), "http://www.w3.org/2000/svg");
      }) << name << " " << to_string(kind);
      EXPECT_NE(doc.text.find(doc.request_hash), std::string::npos);
      EXPECT_GT(doc.point_count, 0u) << to_string(kind);
      EXPECT_EQ(doc.text.find("nan"), std::string::npos) << to_string(kind);
      EXPECT_EQ(doc.text.find("inf"), std::string::npos) << to_string(kind);
    }
  }
}

TEST(Render, ByteDeterministicAcrossRuns) {
  const auto& f = reference_frame("USA_IL_Chicago-OHare_TMY3.epw");
  for (auto kind : kAllChartKinds) {
    EXPECT_EQ(draw(f, request(kind)).text, draw(f, request(kind)).text) << to_string(kind);
  }
}

// Frozen SHA-256 of the default charts for the Amsterdam file. A mismatch
// on another platform means floating-point formatting leaked into the
// output. The embedded tool version is part of the bytes.
TEST(Render, MatchesGoldenDigests) {
  const auto& f = reference_frame("NLD_Amsterdam062400_IWEC.epw");
  const auto golden = clima::testing::load_table("golden/render_sha256.csv");
  ASSERT_EQ(golden.rows.size(), kAllChartKinds.size());
  for (const auto& row : golden.rows) {
    const auto kind = chart_kind_from_string(row[0]);
    ASSERT_TRUE(kind) << row[0];
    EXPECT_EQ(clima::testing::sha256_hex(draw(f, request(*kind)).text), row[1]) << row[0];
  }
}

TEST(Render, GlobalModeSharesAxesAcrossStations) {
  const auto& a = reference_frame("NLD_Amsterdam062400_IWEC.epw");
  const auto& b = reference_frame("ITA_PVGIS_45.000_8.000_TMY.epw");
  for (auto kind : kAllChartKinds) {
    const auto da = draw(a, request(kind));
    const auto db = draw(b, request(kind));
    EXPECT_EQ(da.x_axis, db.x_axis) << to_string(kind);
    EXPECT_EQ(da.y_axis, db.y_axis) << to_string(kind);
    if (kind != ChartKind::Psychrometric && kind != ChartKind::Histogram) {
      // frequency charts scale colour by their own counts
      EXPECT_EQ(da.color_range, db.color_range) << to_string(kind);
    }
    const std::regex transform("data-x-domain=\"[^\"]*\"");
    std::smatch ma, mb;
    if (std::regex_search(da.text, ma, transform)) {
      ASSERT_TRUE(std::regex_search(db.text, mb, transform));
      EXPECT_EQ(ma.str(), mb.str()) << to_string(kind);
    }
  }
}

TEST(Render, LocalModeFollowsTheData) {
  const auto& a = reference_frame("NLD_Amsterdam062400_IWEC.epw");
  const auto& b = reference_frame("ITA_PVGIS_45.000_8.000_TMY.epw");
  auto req = request(ChartKind::Heatmap);
  req.range_mode = RangeMode::Local;
  EXPECT_NE(draw(a, req).color_range, draw(b, req).color_range);
  EXPECT_EQ(draw(a, req).color_range, axis_range("t_db", RangeMode::Local, a));
}

TEST(Render, HeatmapDrawsOneCellPerHour) {
  const auto& f = reference_frame("NLD_Amsterdam062400_IWEC.epw");
  const auto doc = draw(f, request(ChartKind::Heatmap));
  EXPECT_EQ(doc.point_count, 8760u);
  EXPECT_EQ(count_of(doc.text, "class=\"cell\""), 8760u);
}

TEST(Render, ScatterPointCountEqualsFilteredRows) {
  const auto& f = reference_frame("USA_IL_Chicago-OHare_TMY3.epw");
  auto req = request(ChartKind::ExplorerScatter);
  req.filter.months = analytics::month_range(6, 8);
  req.filter.hours = analytics::hour_range(10, 16);
  const auto doc = draw(f, req);
  const auto data = analytics::explorer_triple(f, "t_db", "rh", "t_db", req.filter);
  EXPECT_EQ(doc.point_count, data.points.size());
  EXPECT_EQ(count_of(doc.text, "class=\"point\""), data.points.size());
}

TEST(Render, EmptyFilterGivesEmptyChart) {
  const auto& f = reference_frame("USA_IL_Chicago-OHare_TMY3.epw");
  auto req = request(ChartKind::Psychrometric);
  req.filter.variable = "t_db";
  req.filter.variable_min = 100.0;
  const auto doc = draw(f, req);
  EXPECT_EQ(doc.point_count, 0u);
  EXPECT_NO_THROW(parse_xml(doc.text));
  req.color_variable = "rh";
  EXPECT_EQ(draw(f, req).point_count, 0u);
}

TEST(Render, PsychrometricColouredByVariable) {
  const auto& f = reference_frame("NLD_Amsterdam062400_IWEC.epw");
  auto req = request(ChartKind::Psychrometric);
  req.color_variable = "utci_sun_wind";
  const auto doc = draw(f, req);
  const auto data = analytics::psychro_bins(f, req.color_variable);
  EXPECT_EQ(doc.point_count, data.points.size());
}

TEST(Render, IncompatibleAndUnknownRequests) {
  const auto& f = reference_frame("NLD_Amsterdam062400_IWEC.epw");
  auto rose = request(ChartKind::WindRose);
  rose.variable = "t_db";
  try {
    (void)draw(f, rose);
    FAIL();
  } catch (const BadRequest& e) {
    EXPECT_EQ(e.code(), "IncompatibleRequest");
  }
  auto heat = request(ChartKind::Heatmap);
  heat.variable = "nope";
  EXPECT_THROW((void)draw(f, heat), UnknownColumn);
  heat.variable = "t_db";
  heat.width = 100;
  EXPECT_THROW((void)draw(f, heat), BadRequest);
}

TEST(Render, RequestHashIgnoresSpelledOutDefaults) {
  ChartRequest a = request(ChartKind::ExplorerScatter);
  ChartRequest b = a;
  b.variable = "t_db";
  b.y_variable = "rh";
  b.color_variable = "t_db";
  EXPECT_EQ(request_hash(a), request_hash(b));
  b.bins = 30;
  EXPECT_NE(request_hash(a), request_hash(b));
  EXPECT_EQ(request_hash(a).size(), 16u);
  EXPECT_EQ(with_defaults(request(ChartKind::WindRose)).variable, "wind_speed");
}

TEST(Render, KindNamesRoundTrip) {
  for (auto kind : kAllChartKinds) EXPECT_EQ(chart_kind_from_string(to_string(kind)), kind);
  EXPECT_FALSE(chart_kind_from_string("pie"));
  EXPECT_EQ(range_mode_from_string("local"), RangeMode::Local);
  EXPECT_FALSE(range_mode_from_string("auto"));
}

TEST(AxisRange, Examples) {
  // [-0.5, 10.5] padded, step 2 for a span of 11
  EXPECT_EQ(nice_local_range(0.0, 10.0), (AxisRange{-2.0, 12.0}));
  EXPECT_EQ(nice_local_range(0.0, 100.0), (AxisRange{-20.0, 120.0}));  // span 110, step 20
  EXPECT_EQ(nice_local_range(5.0, 5.0), (AxisRange{4.0, 6.0}));
  EXPECT_EQ(nice_local_range(10.0, 0.0), nice_local_range(0.0, 10.0));
  const auto r = nice_local_range(-7.3, 31.9);
  EXPECT_LE(r.min, -7.3 - 0.05 * 39.2);
  EXPECT_GE(r.max, 31.9 + 0.05 * 39.2);
  ASSERT_TRUE(global_range("t_db"));
  EXPECT_EQ(*global_range("t_db"), (AxisRange{-40.0, 50.0}));
  EXPECT_EQ(*global_range("rh"), (AxisRange{0.0, 100.0}));
  EXPECT_EQ(*global_range("ghi"), (AxisRange{0.0, 1200.0}));
  EXPECT_EQ(*global_range("wind_speed"), (AxisRange{0.0, 25.0}));
  EXPECT_FALSE(global_range("no_such_column"));
  const auto& f = reference_frame("NLD_Amsterdam062400_IWEC.epw");
  EXPECT_EQ(axis_range("t_db", RangeMode::Global, f), *global_range("t_db"));
  EXPECT_THROW((void)axis_range("nope", RangeMode::Global, f), UnknownColumn);
}
