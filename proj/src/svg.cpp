#include "svg.hpp"

#include "clima/numfmt.hpp"

namespace clima::svg {

namespace {

std::string class_attr(std::string_view cls) {
  return cls.empty() ? std::string() : " class=\"" + std::string(cls) + "\"";
}

std::string extra(std::string_view attrs) { return attrs.empty() ? std::string() : " " + std::string(attrs); }

std::string point_list(const Points& pts) {
  std::string out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ' ';
    out += num(pts[i].first);
    out += ',';
    out += num(pts[i].second);
  }
  return out;
}

}  // namespace

std::string num(double v) { return format_sig(v, 6); }

std::string escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

Writer::Writer(int width, int height) : width_(width), height_(height) {}

void Writer::open_group(std::string_view cls, std::string_view extra_attributes) {
  body_ += "<g" + class_attr(cls) + extra(extra_attributes) + ">\n";
  ++depth_;
}

void Writer::close_group() {
  if (depth_ == 0) return;
  body_ += "</g>\n";
  --depth_;
}

void Writer::rect(double x, double y, double w, double h, std::string_view fill, std::string_view cls,
                  std::string_view extra_attributes) {
  body_ += "<rect" + class_attr(cls) + " x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(w) +
           "\" height=\"" + num(h) + "\" fill=\"" + std::string(fill) + "\"" + extra(extra_attributes) + "/>\n";
}

void Writer::circle(double cx, double cy, double r, std::string_view fill, std::string_view cls) {
  body_ += "<circle" + class_attr(cls) + " cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" r=\"" + num(r) +
           "\" fill=\"" + std::string(fill) + "\"/>\n";
}

void Writer::line(double x1, double y1, double x2, double y2, std::string_view stroke, double width,
                  std::string_view cls) {
  body_ += "<line" + class_attr(cls) + " x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) +
           "\" y2=\"" + num(y2) + "\" stroke=\"" + std::string(stroke) + "\" stroke-width=\"" + num(width) + "\"/>\n";
}

void Writer::polyline(const Points& pts, std::string_view stroke, double width, std::string_view cls,
                      std::string_view dash) {
  if (pts.empty()) return;
  body_ += "<polyline" + class_attr(cls) + " points=\"" + point_list(pts) + "\" fill=\"none\" stroke=\"" +
           std::string(stroke) + "\" stroke-width=\"" + num(width) + "\"";
  if (!dash.empty()) body_ += " stroke-dasharray=\"" + std::string(dash) + "\"";
  body_ += "/>\n";
}

void Writer::polygon(const Points& pts, std::string_view fill, double opacity, std::string_view cls,
                     std::string_view stroke) {
  if (pts.empty()) return;
  body_ += "<polygon" + class_attr(cls) + " points=\"" + point_list(pts) + "\" fill=\"" + std::string(fill) +
           "\" fill-opacity=\"" + num(opacity) + "\" stroke=\"" + std::string(stroke) + "\"/>\n";
}

void Writer::path(std::string_view d, std::string_view fill, std::string_view stroke, std::string_view cls) {
  body_ += "<path" + class_attr(cls) + " d=\"" + std::string(d) + "\" fill=\"" + std::string(fill) +
           "\" stroke=\"" + std::string(stroke) + "\"/>\n";
}

void Writer::text(double x, double y, std::string_view content, std::string_view anchor, double size,
                  std::string_view cls, std::string_view transform) {
  body_ += "<text" + class_attr(cls) + " x=\"" + num(x) + "\" y=\"" + num(y) + "\" font-size=\"" + num(size) +
           "\" text-anchor=\"" + std::string(anchor) + "\"";
  if (!transform.empty()) body_ += " transform=\"" + std::string(transform) + "\"";
  body_ += ">" + escape(content) + "</text>\n";
}

void Writer::raw(std::string_view markup) { body_ += markup; }

std::string Writer::finish(std::string_view title, std::string_view metadata) {
  while (depth_ > 0) close_group();
  std::string out;
  out.reserve(body_.size() + 512);
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(width_) +
         "\" height=\"" + std::to_string(height_) + "\" viewBox=\"0 0 " + std::to_string(width_) + " " +
         std::to_string(height_) + "\" font-family=\"sans-serif\">\n";
  out += "<title>" + escape(title) + "</title>\n";
  out += metadata;
  out += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(width_) + "\" height=\"" + std::to_string(height_) +
         "\" fill=\"#ffffff\"/>\n";
  out += body_;
  out += "</svg>\n";
  return out;
}

}  // namespace clima::svg
