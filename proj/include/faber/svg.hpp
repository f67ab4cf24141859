#pragma once

// Minimal deterministic SVG writer: fixed canvas and styling, coordinates
// printed with four decimals, elements emitted in insertion order.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "faber/common.hpp"

namespace faber::svg {

inline std::string fmt4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  std::string s = buf;
  if (s == "-0.0000") s = "0.0000";
  return s;
}

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Style {
  std::string stroke = "#000000";
  double width = 1.5;
  std::string dash;  // empty for solid
};

/// Plot of curves and points in the complex plane with equal axis scales.
class Figure {
 public:
  static constexpr double kWidth = 800.0;
  static constexpr double kHeight = 800.0;
  static constexpr double kMargin = 50.0;

  explicit Figure(std::string title) : title_(std::move(title)) {}

  void add_curve(std::vector<cplx> pts, Style style) { curves_.push_back({std::move(pts), std::move(style)}); }

  void add_points(std::vector<cplx> pts, std::string fill, double radius) {
    dots_.push_back({std::move(pts), std::move(fill), radius});
  }

  /// Fixes the data window; otherwise it is the bounding box of all content.
  void set_window(double xmin, double xmax, double ymin, double ymax) {
    window_ = {xmin, xmax, ymin, ymax};
    fixed_window_ = true;
  }

  void write(std::ostream& os) const {
    auto [xmin, xmax, ymin, ymax] = fixed_window_ ? window_ : bounding_box();
    double span = std::max(xmax - xmin, ymax - ymin);
    if (!(span > 0.0)) span = 1.0;
    double cx = 0.5 * (xmin + xmax), cy = 0.5 * (ymin + ymax);
    double scale = (kWidth - 2.0 * kMargin) / span;
    auto X = [&](double x) { return kWidth / 2.0 + (x - cx) * scale; };
    auto Y = [&](double y) { return kHeight / 2.0 - (y - cy) * scale; };

    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
       << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"#ffffff\"/>\n";
    os << "<text x=\"" << kMargin << "\" y=\"30\" font-family=\"sans-serif\" font-size=\"16\">" << xml_escape(title_)
       << "</text>\n";
    // axes through the origin when visible
    double lo_x = cx - span / 2.0, hi_x = cx + span / 2.0, lo_y = cy - span / 2.0, hi_y = cy + span / 2.0;
    if (lo_y <= 0.0 && 0.0 <= hi_y)
      os << "<line x1=\"" << fmt4(X(lo_x)) << "\" y1=\"" << fmt4(Y(0.0)) << "\" x2=\"" << fmt4(X(hi_x)) << "\" y2=\""
         << fmt4(Y(0.0)) << "\" stroke=\"#bbbbbb\" stroke-width=\"0.75\"/>\n";
    if (lo_x <= 0.0 && 0.0 <= hi_x)
      os << "<line x1=\"" << fmt4(X(0.0)) << "\" y1=\"" << fmt4(Y(lo_y)) << "\" x2=\"" << fmt4(X(0.0)) << "\" y2=\""
         << fmt4(Y(hi_y)) << "\" stroke=\"#bbbbbb\" stroke-width=\"0.75\"/>\n";
    for (const auto& c : curves_) {
      if (c.pts.empty()) continue;
      os << "<polyline fill=\"none\" stroke=\"" << c.style.stroke << "\" stroke-width=\"" << fmt4(c.style.width)
         << '"';
      if (!c.style.dash.empty()) os << " stroke-dasharray=\"" << c.style.dash << '"';
      os << " points=\"";
      for (std::size_t i = 0; i < c.pts.size(); ++i) {
        if (i) os << ' ';
        os << fmt4(X(c.pts[i].real())) << ',' << fmt4(Y(c.pts[i].imag()));
      }
      os << "\"/>\n";
    }
    for (const auto& d : dots_)
      for (cplx z : d.pts)
        os << "<circle cx=\"" << fmt4(X(z.real())) << "\" cy=\"" << fmt4(Y(z.imag())) << "\" r=\"" << fmt4(d.radius)
           << "\" fill=\"" << d.fill << "\"/>\n";
    os << "</svg>\n";
  }

 private:
  struct Curve {
    std::vector<cplx> pts;
    Style style;
  };
  struct Dots {
    std::vector<cplx> pts;
    std::string fill;
    double radius;
  };
  struct Window {
    double xmin, xmax, ymin, ymax;
  };

  Window bounding_box() const {
    Window w{INFINITY, -INFINITY, INFINITY, -INFINITY};
    auto grow = [&](cplx z) {
      w.xmin = std::min(w.xmin, z.real());
      w.xmax = std::max(w.xmax, z.real());
      w.ymin = std::min(w.ymin, z.imag());
      w.ymax = std::max(w.ymax, z.imag());
    };
    for (const auto& c : curves_)
      for (cplx z : c.pts) grow(z);
    for (const auto& d : dots_)
      for (cplx z : d.pts) grow(z);
    if (!(w.xmin <= w.xmax)) return {-1.0, 1.0, -1.0, 1.0};
    double pad = 0.05 * std::max(w.xmax - w.xmin, w.ymax - w.ymin);
    return {w.xmin - pad, w.xmax + pad, w.ymin - pad, w.ymax + pad};
  }

  std::string title_;
  std::vector<Curve> curves_;
  std::vector<Dots> dots_;
  Window window_{};
  bool fixed_window_ = false;
};

}  // namespace faber::svg
