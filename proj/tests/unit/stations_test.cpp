#include <gtest/gtest.h>

#include <set>

#include "clima/error.hpp"
#include "clima/stations.hpp"
#include "fixtures.hpp"

using namespace clima;
using namespace clima::service;

namespace {

StationIndex fixture_catalog() {
  return StationIndex::from_csv(clima::testing::read_text(clima::testing::data_path("stations_fixture.csv")));
}

std::set<std::string> ids(const StationPage& page) {
  std::set<std::string> out;
  for (const auto* s : page.items) out.insert(s->id);
  return out;
}

const std::string kHeader = "station_id,name,country,lat,lon,url,source\n";

}  // namespace

TEST(Stations, FixtureCatalogLoads) {
  const auto index = fixture_catalog();
  EXPECT_GE(index.size(), 20u);
  const auto* s = index.find("FX001");
  ASSERT_NE(s, nullptr);
  EXPECT_EQ(s->name, "Amsterdam Schiphol");
  EXPECT_EQ(s->country, "NLD");
  EXPECT_EQ(s->source, DataSource::EnergyPlus);
  EXPECT_EQ(index.find("FX002")->source, DataSource::OneBuilding);
  EXPECT_EQ(index.find("nope"), nullptr);
}

TEST(Stations, ShippedCatalogLoads) {
  const auto text = clima::testing::read_text(std::filesystem::path(CLIMA_TEST_DATA_DIR) / ".." / ".." / "data" /
                                              "stations.csv");
  const auto index = StationIndex::from_csv(text);
  EXPECT_GE(index.size(), 20u);
  for (const auto& s : index.stations()) EXPECT_EQ(s.url.rfind("https://", 0), 0u) << s.id;
}

TEST(Stations, BoundingBox) {
  const auto index = fixture_catalog();
  StationQuery q;
  q.bbox = parse_bbox("3,50,6,53");
  EXPECT_EQ(ids(index.query(q)), (std::set<std::string>{"FX001", "FX004", "FX005", "FX010", "FX013"}));
  // across the antimeridian: Suva (178.57) and Apia (-171.78), not Wellington (174.8 at -41)
  q.bbox = parse_bbox("170,-25,-165,-5");
  EXPECT_EQ(ids(index.query(q)), (std::set<std::string>{"FX016", "FX017"}));
  q.bbox = parse_bbox("170,-45,-165,-5");
  EXPECT_EQ(ids(index.query(q)), (std::set<std::string>{"FX016", "FX017", "FX018"}));
  EXPECT_TRUE(parse_bbox("-180,-90,180,90").contains(0, 180));
}

TEST(Stations, BoundingBoxErrors) {
  for (const char* bad : {"1,2,3", "a,b,c,d", "0,0,181,10", "0,50,10,40", "0,-91,10,0", "1,2,3,4,5", ""}) {
    try {
      (void)parse_bbox(bad);
      ADD_FAILURE() << bad;
    } catch (const BadRequest& e) {
      EXPECT_EQ(e.code(), "BadBoundingBox");
    }
  }
}

TEST(Stations, TextSearchAndPaging) {
  const auto index = fixture_catalog();
  StationQuery q;
  q.text = "nld";
  EXPECT_EQ(index.query(q).total, 5u);
  q.text = "CHICAGO";
  EXPECT_EQ(ids(index.query(q)), (std::set<std::string>{"FX002"}));
  q.text = "fx01";
  const auto all = index.query(q);
  EXPECT_EQ(all.total, 10u);
  q.limit = 3;
  q.offset = 0;
  std::vector<std::string> seen;
  for (q.offset = 0; q.offset < all.total; q.offset += q.limit) {
    const auto page = index.query(q);
    EXPECT_EQ(page.total, all.total);
    EXPECT_LE(page.items.size(), 3u);
    for (const auto* s : page.items) seen.push_back(s->id);
  }
  ASSERT_EQ(seen.size(), all.total);
  for (std::size_t i = 0; i < seen.size(); ++i) EXPECT_EQ(seen[i], all.items[i]->id);
  q.offset = 100;
  EXPECT_TRUE(index.query(q).items.empty());
}

TEST(Stations, RejectsBadCatalogs) {
  EXPECT_THROW(StationIndex::from_csv(""), std::invalid_argument);
  EXPECT_THROW(StationIndex::from_csv("id,name\n"), std::invalid_argument);
  EXPECT_THROW(StationIndex::from_csv(kHeader + "A,a,X,91,0,http://x,energyplus\n"), std::invalid_argument);
  EXPECT_THROW(StationIndex::from_csv(kHeader + "A,a,X,0,200,http://x,energyplus\n"), std::invalid_argument);
  EXPECT_THROW(StationIndex::from_csv(kHeader + "A,a,X,zero,0,http://x,energyplus\n"), std::invalid_argument);
  EXPECT_THROW(StationIndex::from_csv(kHeader + "A,a,X,0,0,http://x,noaa\n"), std::invalid_argument);
  EXPECT_THROW(StationIndex::from_csv(kHeader + "A,a,X,0,0,http://x,energyplus\nA,b,Y,1,1,http://y,energyplus\n"),
               std::invalid_argument);
  EXPECT_THROW(StationIndex::from_csv(kHeader + "A,a,X,0,0\n"), std::invalid_argument);
  auto index = StationIndex::from_csv(kHeader + "A,a,X,0,0,http://x,energyplus\n");
  EXPECT_THROW(index.merge(StationIndex::from_csv(kHeader + "A,b,Y,1,1,http://y,onebuilding\n")),
               std::invalid_argument);
  index.merge(StationIndex::from_csv(kHeader + "B,b,Y,1,1,http://y,onebuilding\n"));
  EXPECT_EQ(index.size(), 2u);
}

TEST(Stations, CsvRoundTrip) {
  const auto index = fixture_catalog();
  const auto again = StationIndex::from_csv(StationIndex::to_csv(index.stations()));
  ASSERT_EQ(again.size(), index.size());
  for (std::size_t i = 0; i < index.size(); ++i) {
    const auto& a = index.stations()[i];
    const auto& b = again.stations()[i];
    EXPECT_EQ(a.id, b.id);
    EXPECT_EQ(a.name, b.name);
    EXPECT_EQ(a.latitude, b.latitude);
    EXPECT_EQ(a.longitude, b.longitude);
    EXPECT_EQ(a.url, b.url);
    EXPECT_EQ(a.source, b.source);
  }
}
