#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace clima::svg {

/// Numbers in SVG text: six significant digits, no exponent drift.
std::string num(double v);
std::string escape(std::string_view text);

using Points = std::vector<std::pair<double, double>>;

/// Minimal append-only SVG 1.1 writer. Elements are emitted in call order,
/// one per line.
class Writer {
 public:
  Writer(int width, int height);

  void open_group(std::string_view cls, std::string_view extra_attributes = {});
  void close_group();
  void rect(double x, double y, double w, double h, std::string_view fill, std::string_view cls = {},
            std::string_view extra_attributes = {});
  void circle(double cx, double cy, double r, std::string_view fill, std::string_view cls = {});
  void line(double x1, double y1, double x2, double y2, std::string_view stroke, double width = 1.0,
            std::string_view cls = {});
  void polyline(const Points& pts, std::string_view stroke, double width = 1.0, std::string_view cls = {},
                std::string_view dash = {});
  void polygon(const Points& pts, std::string_view fill, double opacity = 1.0, std::string_view cls = {},
               std::string_view stroke = "none");
  void path(std::string_view d, std::string_view fill, std::string_view stroke = "none", std::string_view cls = {});
  void text(double x, double y, std::string_view content, std::string_view anchor = "start", double size = 11.0,
            std::string_view cls = {}, std::string_view transform = {});
  void raw(std::string_view markup);

  /// Closes the root element; `metadata` is inserted verbatim after <title>.
  std::string finish(std::string_view title, std::string_view metadata);

 private:
  int width_;
  int height_;
  std::string body_;
  int depth_ = 0;
};

}  // namespace clima::svg
