// Batch front end over the analysis library. Never touches the network.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "clima/analytics.hpp"
#include "clima/epw.hpp"
#include "clima/error.hpp"
#include "clima/frame.hpp"
#include "clima/json_codec.hpp"
#include "clima/numfmt.hpp"
#include "clima/params.hpp"
#include "clima/render.hpp"
#include "clima/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

// Problems with the user's input; everything else is internal.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + path.string());
    out << text;
    if (!out.flush()) throw InputError("cannot write " + path.string());
  }
  std::filesystem::rename(tmp, path);
}

clima::analytics::ClimateFrame load_frame(const std::filesystem::path& path) {
  const auto text = read_file(path);
  try {
    return clima::analytics::build_frame(clima::epw::parse_epw(text));
  } catch (const clima::epw::ParseError& e) {
    throw InputError(std::string(clima::epw::to_string(e.kind())) + " (line " + std::to_string(e.line()) +
                     "): " + e.what());
  }
}

std::string fmt(const std::optional<double>& v, int digits = 4) {
  return v ? clima::format_sig(*v, digits) : std::string("n/a");
}

void print_summary(const clima::analytics::SummaryReport& r) {
  const auto& loc = r.location;
  std::cout << "location        " << loc.city << ", " << loc.state_region << ", " << loc.country << '\n'
            << "coordinates     " << clima::format_sig(loc.latitude) << ", " << clima::format_sig(loc.longitude)
            << " (elev " << clima::format_sig(loc.elevation) << " m, UTC" << (loc.timezone >= 0 ? "+" : "")
            << clima::format_sig(loc.timezone) << ")\n"
            << "records         " << r.record_count << '\n'
            << "mean t_db       " << fmt(r.mean_t_db) << " C\n";
  if (r.hottest_month) {
    std::cout << "hottest month   " << r.hottest_month->name << " (" << clima::format_sig(r.hottest_month->mean, 4)
              << " C)\n";
  }
  if (r.coldest_month) {
    std::cout << "coldest month   " << r.coldest_month->name << " (" << clima::format_sig(r.coldest_month->mean, 4)
              << " C)\n";
  }
  std::cout << "annual GHI      " << clima::format_sig(r.annual_ghi_kwh, 5) << " kWh/m2\n"
            << "annual DHI      " << clima::format_sig(r.annual_dhi_kwh, 5) << " kWh/m2\n"
            << "diffuse share   " << fmt(r.diffuse_share, 3) << " %\n"
            << "Koppen-Geiger   " << r.koppen.label
            << (r.koppen.precipitation_missing ? " (temperature only, precipitation missing)" : "") << '\n';
}

struct ChartOptions {
  std::string kind;
  std::string var, y, color, range, months, hours, preset;
  std::optional<int> width, height, bins;
  std::optional<double> base_heating, base_cooling;
  std::filesystem::path output;
};

// Same parameter path as the service so both produce identical bytes.
clima::params::ParamMap chart_params(const ChartOptions& o) {
  clima::params::ParamMap p;
  auto put = [&](const char* key, const std::string& v) {
    if (!v.empty()) p.emplace(key, v);
  };
  put("variable", o.var);
  put("y", o.y);
  put("color", o.color);
  put("range", o.range);
  put("months", o.months);
  put("hours", o.hours);
  put("preset", o.preset);
  if (o.width) p.emplace("width", std::to_string(*o.width));
  if (o.height) p.emplace("height", std::to_string(*o.height));
  if (o.bins) p.emplace("bins", std::to_string(*o.bins));
  if (o.base_heating) p.emplace("base_heating", clima::format_exact(*o.base_heating));
  if (o.base_cooling) p.emplace("base_cooling", clima::format_exact(*o.base_cooling));
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Climate analysis of EnergyPlus weather files"};
  app.set_version_flag("--version", std::string(clima::version()));
  app.require_subcommand(1);

  std::filesystem::path input;
  bool as_json = false;

  auto* summarize = app.add_subcommand("summarize", "Print the climate summary of an EPW file");
  summarize->add_option("file", input, "EPW file")->required();
  summarize->add_flag("--json", as_json, "Print JSON to stdout");

  std::filesystem::path frame_out;
  auto* exporter = app.add_subcommand("export", "Write the derived hourly frame as CSV");
  exporter->add_option("file", input, "EPW file")->required();
  exporter->add_option("--frame", frame_out, "Output CSV path")->required();

  ChartOptions chart;
  std::string kinds;
  for (auto k : clima::render::kAllChartKinds) kinds += std::string(kinds.empty() ? "" : ", ") + std::string(to_string(k));
  auto* charter = app.add_subcommand("chart", "Render one chart as SVG");
  charter->add_option("file", input, "EPW file")->required();
  charter->add_option("--kind", chart.kind, "Chart kind: " + kinds)->required();
  charter->add_option("--var", chart.var, "Plotted column (defaults per kind)");
  charter->add_option("--y", chart.y, "Explorer y column");
  charter->add_option("--color", chart.color, "Colour column");
  charter->add_option("--range", chart.range, "Axis range mode: global or local")
      ->check(CLI::IsMember({"global", "local"}));
  charter->add_option("--months", chart.months,
                      "Months, 'a-b' (wrap allowed, e.g. 11-2) or a comma list, 1-12");
  charter->add_option("--hours", chart.hours, "Hours, 'a-b' (wrap allowed, e.g. 19-6) or a comma list, 1-24");
  charter->add_option("--preset", chart.preset, "Filter preset: annual, DJF, MAM, JJA, SON, day, night");
  charter->add_option("--width", chart.width, "Width in px");
  charter->add_option("--height", chart.height, "Height in px");
  charter->add_option("--bins", chart.bins, "Explorer bin count");
  charter->add_option("--base-heating", chart.base_heating, "Heating base temperature, C");
  charter->add_option("--base-cooling", chart.base_cooling, "Cooling base temperature, C");
  charter->add_option("-o,--output", chart.output, "Output SVG path")->required();

  auto* validate = app.add_subcommand("validate", "Check EPW structure and report problems");
  validate->add_option("file", input, "EPW file")->required();
  validate->add_flag("--json", as_json, "Print the report as JSON to stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*summarize) {
      const auto report = clima::analytics::climate_summary(load_frame(input));
      if (as_json) {
        std::cout << clima::codec::encode(report).dump(2) << '\n';
      } else {
        print_summary(report);
      }
    } else if (*exporter) {
      write_file(frame_out, clima::analytics::export_frame_csv(load_frame(input)));
      std::cerr << "wrote " << frame_out.string() << '\n';
    } else if (*charter) {
      const auto request = clima::params::parse_chart_request(chart.kind, chart_params(chart));
      const auto doc = clima::render::render(load_frame(input), request);
      write_file(chart.output, doc.text);
      std::cerr << "wrote " << chart.output.string() << " (" << doc.point_count << " points, hash "
                << doc.request_hash << ")\n";
    } else if (*validate) {
      const auto report = clima::epw::validate_structure(read_file(input));
      if (as_json) {
        std::cout << clima::codec::encode(report).dump(2) << '\n';
      } else {
        std::cerr << (report.ok ? "ok" : "invalid") << ": " << report.record_count << " records, "
                  << report.issues.size() << " issues\n";
        for (const auto& issue : report.issues) {
          std::cerr << "  line " << issue.line << ": " << clima::epw::to_string(issue.kind) << ": " << issue.message
                    << '\n';
        }
      }
      return report.ok ? kExitOk : kExitInput;
    }
    return kExitOk;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const clima::BadRequest& e) {
    std::cerr << "error: " << e.code() << ": " << e.what() << '\n';
    return kExitInput;
  } catch (const clima::UnknownColumn& e) {
    std::cerr << "error: UnknownColumn: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}
