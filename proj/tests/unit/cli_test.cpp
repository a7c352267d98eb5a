#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <json.hpp>

#include "clima/csv.hpp"
#include "clima/frame.hpp"
#include "clima/params.hpp"
#include "clima/render.hpp"
#include "fixture_server.hpp"

using clima::testing::data_path;
using clima::testing::read_text;
using clima::testing::TempDir;

namespace {

struct Run {
  int exit_code = -1;
  std::string out;
  std::string err;
};

Run run(const std::string& args, const TempDir& dir) {
  const auto out = dir.path() / "stdout.txt";
  const auto err = dir.path() / "stderr.txt";
  const auto cmd = std::string(CLIMA_CLI_PATH) + " " + args + " >" + out.string() + " 2>" + err.string();
  const int status = std::system(cmd.c_str());
  Run r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = read_text(out);
  r.err = read_text(err);
  return r;
}

std::string epw(const std::string& name) { return data_path(name).string(); }

}  // namespace

TEST(Cli, SummarizeJson) {
  TempDir dir;
  const auto r = run("summarize " + epw("NLD_Amsterdam062400_IWEC.epw") + " --json", dir);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["record_count"], 8760);
  EXPECT_TRUE(j.contains("koppen"));
  const auto text = run("summarize " + epw("NLD_Amsterdam062400_IWEC.epw"), dir);
  EXPECT_EQ(text.exit_code, 0);
  EXPECT_NE(text.out.find("AMSTERDAM"), std::string::npos);
}

TEST(Cli, ExportWritesTheFrame) {
  TempDir dir;
  const auto csv_path = dir.path() / "frame.csv";
  const auto r = run("export " + epw("USA_IL_Chicago-OHare_TMY3.epw") + " --frame " + csv_path.string(), dir);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const auto text = read_text(csv_path);
  EXPECT_EQ(clima::csv::parse(text).size(), 8761u);
  EXPECT_EQ(text, clima::analytics::export_frame_csv(clima::testing::reference_frame("USA_IL_Chicago-OHare_TMY3.epw")));
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, ChartMatchesLibraryBytes) {
  TempDir dir;
  const auto& frame = clima::testing::reference_frame("ITA_PVGIS_45.000_8.000_TMY.epw");
  const auto svg = dir.path() / "c.svg";
  struct Case {
    std::string args;
    std::string kind;
    clima::params::ParamMap params;
  };
  const std::vector<Case> cases{
      {"--kind heatmap", "heatmap", {}},
      {"--kind wind_rose --months 12-2", "wind_rose", {{"months", "12-2"}}},
      {"--kind psychrometric --color utci_sun_wind --preset JJA", "psychrometric",
       {{"color", "utci_sun_wind"}, {"preset", "JJA"}}},
      {"--kind explorer_scatter --var ghi --y t_db --color rh --range local", "explorer_scatter",
       {{"var", "ghi"}, {"y", "t_db"}, {"color", "rh"}, {"range", "local"}}},
      {"--kind degree_days --base-heating 16 --base-cooling 22 --width 700", "degree_days",
       {{"base_heating", "16"}, {"base_cooling", "22"}, {"width", "700"}}},
  };
  for (const auto& c : cases) {
    const auto r = run("chart " + epw("ITA_PVGIS_45.000_8.000_TMY.epw") + " " + c.args + " -o " + svg.string(), dir);
    ASSERT_EQ(r.exit_code, 0) << c.args << ": " << r.err;
    const auto expected = clima::render::render(frame, clima::params::parse_chart_request(c.kind, c.params)).text;
    EXPECT_TRUE(read_text(svg) == expected) << c.args;
  }
}

TEST(Cli, ValidateReportsProblems) {
  TempDir dir;
  auto ok = run("validate " + epw("NLD_Amsterdam062400_IWEC.epw") + " --json", dir);
  EXPECT_EQ(ok.exit_code, 0);
  EXPECT_TRUE(nlohmann::json::parse(ok.out)["header_ok"].get<bool>());
  const auto bad = dir.path() / "bad.epw";
  {
    std::ofstream out(bad);
    out << "not a weather file\n";
  }
  auto r = run("validate " + bad.string(), dir);
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE((r.out + r.err).find("MalformedHeader"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  TempDir dir;
  const auto out = (dir.path() / "x.svg").string();
  EXPECT_EQ(run("summarize /no/such/file.epw", dir).exit_code, 2);
  EXPECT_EQ(run("chart " + epw("NLD_Amsterdam062400_IWEC.epw") + " --kind pie -o " + out, dir).exit_code, 2);
  EXPECT_EQ(run("chart " + epw("NLD_Amsterdam062400_IWEC.epw") + " --kind heatmap --var nope -o " + out, dir).exit_code,
            2);
  EXPECT_EQ(
      run("chart " + epw("NLD_Amsterdam062400_IWEC.epw") + " --kind wind_rose --var t_db -o " + out, dir).exit_code, 2);
  EXPECT_FALSE(std::filesystem::exists(out));
  EXPECT_EQ(run("frobnicate", dir).exit_code, 2);
  const auto r = run("summarize /no/such/file.epw", dir);
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
}
