#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "trim/geometry.hpp"

namespace trim {

struct StrokeStyle {
  std::string color = "#000000";
  double width = 1.5;
  std::string dash;  // stroke-dasharray, empty = solid
};

/// Figure layout: viewport in domain coordinates, per-role stroke styles and
/// the per-curve sample resolution.
struct RenderSpec {
  Point view_min{-1.0, -1.0};
  Point view_max{1.0, 1.0};
  int resolution = 512;
  StrokeStyle s_ball{"#1f77b4", 1.8, "7 5"};  // s balls are drawn dashed
  StrokeStyle euclid_bound{"#d62728", 1.4, ""};
  StrokeStyle j_ball{"#2ca02c", 1.4, ""};
  StrokeStyle k_ball{"#9467bd", 1.4, ""};
  StrokeStyle domain_boundary{"#333333", 2.0, ""};

  void validate() const {
    require(resolution >= 64, "render resolution must be at least 64");
    require(view_max.x() > view_min.x() && view_max.y() > view_min.y(),
            "render viewport is empty");
  }
};

/// Fixed 800x800 canvas with equal-aspect world mapping and a 2% margin.
class SvgCanvas {
 public:
  SvgCanvas(Point view_min, Point view_max) : lo_(std::move(view_min)), hi_(std::move(view_max)) {
    require(hi_.x() > lo_.x() && hi_.y() > lo_.y(), "render viewport is empty");
    double span = std::max(hi_.x() - lo_.x(), hi_.y() - lo_.y());
    scale_ = (kSize - 2.0 * kMargin) / span;
    cx_ = 0.5 * (lo_.x() + hi_.x());
    cy_ = 0.5 * (lo_.y() + hi_.y());
  }

  void comment(const std::string& text) { body_ += "<!-- " + text + " -->\n"; }

  void polyline(const std::vector<Point>& pts, const StrokeStyle& st,
                const std::string& meta = "", bool close = true) {
    if (!meta.empty()) comment(meta);
    body_ += close ? "<polygon" : "<polyline";
    body_ += " fill=\"none\" " + stroke(st) + " points=\"";
    for (const Point& p : pts) body_ += px(p.x()) + "," + py(p.y()) + " ";
    body_ += "\"/>\n";
  }

  void circle(const Point& c, double radius, const StrokeStyle& st,
              const std::string& meta = "") {
    if (!meta.empty()) comment(meta);
    body_ += "<circle fill=\"none\" " + stroke(st) + " cx=\"" + px(c.x()) + "\" cy=\"" +
             py(c.y()) + "\" r=\"" + fmt(radius * scale_) + "\"/>\n";
  }

  void line(const Point& a, const Point& b, const StrokeStyle& st) {
    body_ += "<line " + stroke(st) + " x1=\"" + px(a.x()) + "\" y1=\"" + py(a.y()) +
             "\" x2=\"" + px(b.x()) + "\" y2=\"" + py(b.y()) + "\"/>\n";
  }

  void marker(const Point& p, const std::string& color) {
    body_ += "<circle fill=\"" + color + "\" cx=\"" + px(p.x()) + "\" cy=\"" + py(p.y()) +
             "\" r=\"3\"/>\n";
  }

  std::string str() const {
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
           "viewBox=\"0 0 800 800\">\n";
    out += "<rect width=\"800\" height=\"800\" fill=\"#ffffff\"/>\n";
    out += body_;
    out += "</svg>\n";
    return out;
  }

  void save(const std::string& path) const {
    std::ofstream f(path, std::ios::binary);
    require(static_cast<bool>(f), "cannot open output file: " + path);
    f << str();
  }

 private:
  static constexpr double kSize = 800.0;
  static constexpr double kMargin = 16.0;  // 2% each side

  static std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
  }
  std::string px(double wx) const { return fmt(kSize / 2.0 + (wx - cx_) * scale_); }
  std::string py(double wy) const { return fmt(kSize / 2.0 - (wy - cy_) * scale_); }
  std::string stroke(const StrokeStyle& st) const {
    std::string s = "stroke=\"" + st.color + "\" stroke-width=\"" + fmt(st.width) + "\"";
    if (!st.dash.empty()) s += " stroke-dasharray=\"" + st.dash + "\"";
    return s;
  }

  Point lo_, hi_;
  double scale_ = 1.0, cx_ = 0.0, cy_ = 0.0;
  std::string body_;
};

}  // namespace trim
