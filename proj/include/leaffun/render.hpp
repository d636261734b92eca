#pragma once

// Text output: the numeric tables, CSV curve/frame dumps, and small
// self-contained SVG drawings.  All formatting is locale-independent and
// deterministic so the outputs can serve as golden files.
//
// Table values are truncated, not rounded: the reference data this
// reproduces prints the leading digits of the true value followed by an
// ellipsis, so truncation is the faithful way to match it digit for
// digit.

#include <cmath>
#include <cstddef>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "identities.hpp"
#include "leaf.hpp"
#include "lemniscate.hpp"

namespace leaffun {

enum class TableKind { Horizontal, Diagonal, Constants };

struct TableSpec {
  TableKind kind = TableKind::Horizontal;
  double l_start = 0.0;
  double l_end = 1.3;
  double l_step = 0.1;
  int precision = 5;  // digits kept after the point (degrees use one less)
  int n_start = 1;    // order range, Constants only
  int n_end = 10;
};

namespace detail {

// Fixed-point with the digits truncated toward zero.
inline std::string format_truncated(double v, int decimals) {
  const double scale = std::pow(10.0, decimals);
  const double t = std::trunc(v * scale) / scale;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, t);
  return buf;
}

inline std::string format_rounded(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

// %.15g turns a double into a compact, locale-free literal for CSV.
inline std::string format_compact(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

inline std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

constexpr double kDegPerRad = 57.29577951308232;

}  // namespace detail

// Renders one of the three tables: per-phase angle and leaf values for
// either pose, or the half-period constants.
inline std::string render_table(const TableSpec& spec) {
  if (!(spec.l_step > 0.0))
    throw std::invalid_argument("render_table: l_step must be positive");
  if (!(spec.l_start <= spec.l_end))
    throw std::invalid_argument("render_table: l_start must not exceed l_end");
  if (spec.precision < 2 || spec.precision > 15)
    throw std::invalid_argument("render_table: precision must lie in [2, 15]");

  const int prec = spec.precision;
  const std::size_t width = static_cast<std::size_t>(prec) + 9;
  std::string out;

  if (spec.kind == TableKind::Constants) {
    if (spec.n_start < 1 || spec.n_end < spec.n_start)
      throw std::invalid_argument(
          "render_table: constants need 1 <= n_start <= n_end");
    out += detail::pad_left("n", 4);
    out += detail::pad_left("pi_n", width);
    out += '\n';
    for (int n = spec.n_start; n <= spec.n_end; ++n) {
      out += detail::pad_left(std::to_string(n), 4);
      out += detail::pad_left(
          detail::format_truncated(pi_n(LeafOrder(n)), prec), width);
      out += '\n';
    }
    return out;
  }

  const bool horizontal = spec.kind == TableKind::Horizontal;
  const char* theta_name = horizontal ? "theta" : "theta_bar";
  out += detail::pad_left("l", 8);
  out += detail::pad_left(std::string(theta_name) + "_rad", width);
  out += detail::pad_left(std::string(theta_name) + "_deg", width);
  out += detail::pad_left("sleaf2", width);
  out += detail::pad_left("cleaf2", width);
  out += '\n';

  // the end of the range is included up to a whisker of rounding slack
  const double limit = spec.l_end + spec.l_step * 1e-9;
  for (int i = 0;; ++i) {
    const double l = spec.l_start + spec.l_step * i;
    if (l > limit) break;
    const double s = sleaf(detail::kOrder2, l).value;
    const double c = cleaf(detail::kOrder2, l).value;
    const double theta = horizontal ? theta_from_l_cleaf(l) : theta_from_l_sleaf(l);
    out += detail::pad_left(detail::format_rounded(l, 4), 8);
    out += detail::pad_left(detail::format_truncated(theta, prec), width);
    out += detail::pad_left(
        detail::format_truncated(theta * detail::kDegPerRad, prec - 1), width);
    out += detail::pad_left(detail::format_truncated(s, prec), width);
    out += detail::pad_left(detail::format_truncated(c, prec), width);
    out += '\n';
  }
  return out;
}

// One emitted curve point: phase, polar angle, Cartesian position, and
// the two leaf values the position was built from.
struct CurveSample {
  double l;
  double theta;
  double x;
  double y;
  double sleaf2;
  double cleaf2;
};

// Uniform phase sweep of the principal arc (vertex-to-origin run for the
// horizontal pose, origin-to-vertex for the diagonal one).
inline std::vector<CurveSample> sample_curve(LemniscateVariant v, int samples) {
  if (samples < 2)
    throw std::invalid_argument("sample_curve: need at least 2 samples, got " +
                                std::to_string(samples));
  const double half = 0.5 * pi_n(detail::kOrder2);
  std::vector<CurveSample> rows;
  rows.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    // the fraction reaches exactly 1 at the last sample, so the arc ends
    // exactly on the branch endpoint
    const double l = half * (static_cast<double>(i) / (samples - 1));
    const double s = sleaf(detail::kOrder2, l).value;
    const double c = cleaf(detail::kOrder2, l).value;
    const double theta =
        v == LemniscateVariant::Horizontal ? std::atan(s)
                                           : 0.25 * std::numbers::pi - std::atan(c);
    const double r = v == LemniscateVariant::Horizontal ? c : s;
    rows.push_back({l, theta, r * std::cos(theta), r * std::sin(theta), s, c});
  }
  return rows;
}

inline std::string curve_csv(const std::vector<CurveSample>& rows) {
  std::string out = "l,theta,x,y,sleaf2,cleaf2\n";
  for (const CurveSample& r : rows) {
    out += detail::format_compact(r.l);
    out += ',';
    out += detail::format_compact(r.theta);
    out += ',';
    out += detail::format_compact(r.x);
    out += ',';
    out += detail::format_compact(r.y);
    out += ',';
    out += detail::format_compact(r.sleaf2);
    out += ',';
    out += detail::format_compact(r.cleaf2);
    out += '\n';
  }
  return out;
}

namespace detail {

// SVG canvas shared by the curve and frame drawings.  Coordinates are
// emitted in model units inside a fixed [-1.1, 1.1]^2 viewBox, with the
// y axis flipped to mathematical orientation, so a reader of the file
// can recover curve points directly from the polyline vertices.
inline double svg_x(double x) { return x; }
inline double svg_y(double y) { return -y; }

inline std::string svg_coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.8f", v);
  return buf;
}

inline std::string svg_open() {
  std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" "
                  "height=\"640\" viewBox=\"-1.1 -1.1 2.2 2.2\">\n";
  s += "<rect x=\"-1.1\" y=\"-1.1\" width=\"2.2\" height=\"2.2\" "
       "fill=\"white\"/>\n";
  // light axes for orientation
  s += "<line x1=\"-1.1\" y1=\"0\" x2=\"1.1\" y2=\"0\" stroke=\"#cccccc\" "
       "stroke-width=\"0.004\"/>\n";
  s += "<line x1=\"0\" y1=\"-1.1\" x2=\"0\" y2=\"1.1\" stroke=\"#cccccc\" "
       "stroke-width=\"0.004\"/>\n";
  return s;
}

inline void svg_polyline(std::string& out, const std::vector<PlanarPoint>& pts,
                         const char* color, double width) {
  out += "<polyline fill=\"none\" stroke=\"";
  out += color;
  out += "\" stroke-width=\"";
  out += svg_coord(width);
  out += "\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ' ';
    out += svg_coord(svg_x(pts[i].x));
    out += ',';
    out += svg_coord(svg_y(pts[i].y));
  }
  out += "\"/>\n";
}

inline void svg_segment(std::string& out, PlanarPoint a, PlanarPoint b,
                        const char* color) {
  out += "<line x1=\"" + svg_coord(svg_x(a.x)) + "\" y1=\"" +
         svg_coord(svg_y(a.y)) + "\" x2=\"" + svg_coord(svg_x(b.x)) +
         "\" y2=\"" + svg_coord(svg_y(b.y)) + "\" stroke=\"";
  out += color;
  out += "\" stroke-width=\"0.006\"/>\n";
}

inline void svg_marker(std::string& out, PlanarPoint p, const char* label) {
  out += "<circle cx=\"" + svg_coord(svg_x(p.x)) + "\" cy=\"" +
         svg_coord(svg_y(p.y)) + "\" r=\"0.014\" fill=\"#d62728\"/>\n";
  out += "<text x=\"" + svg_coord(svg_x(p.x) + 0.025) + "\" y=\"" +
         svg_coord(svg_y(p.y) + 0.025) +
         "\" font-family=\"sans-serif\" font-size=\"0.07\">";
  out += label;
  out += "</text>\n";
}

// Both leaves of the full figure, assembled from the principal arc by
// the curve's reflection symmetries.
inline std::vector<std::vector<PlanarPoint>> full_figure(
    LemniscateVariant v, const std::vector<CurveSample>& arc) {
  std::vector<PlanarPoint> leaf1;
  leaf1.reserve(arc.size() * 2);
  if (v == LemniscateVariant::Horizontal) {
    // right leaf: principal arc runs from the vertex to the origin above
    // the axis; the mirror image below the axis closes it
    for (const CurveSample& r : arc) leaf1.push_back({r.x, r.y});
    for (auto it = arc.rbegin(); it != arc.rend(); ++it)
      leaf1.push_back({it->x, -it->y});
  } else {
    // first-quadrant leaf: principal arc plus its mirror across y = x
    for (const CurveSample& r : arc) leaf1.push_back({r.x, r.y});
    for (auto it = arc.rbegin(); it != arc.rend(); ++it)
      leaf1.push_back({it->y, it->x});
  }
  std::vector<PlanarPoint> leaf2;
  leaf2.reserve(leaf1.size());
  for (const PlanarPoint& p : leaf1) leaf2.push_back({-p.x, -p.y});
  return {leaf1, leaf2};
}

}  // namespace detail

inline std::string curve_svg(LemniscateVariant v,
                             const std::vector<CurveSample>& rows) {
  std::string out = detail::svg_open();
  for (const auto& leaf : detail::full_figure(v, rows))
    detail::svg_polyline(out, leaf, "#1f77b4", 0.008);
  out += "</svg>\n";
  return out;
}

// CSV dump of a construction frame: the five named points, the segments
// drawn in the figure, and the named lengths.
inline std::string frame_csv(const ConstructionFrame& f) {
  std::string out = "record,name,x1,y1,x2,y2\n";
  auto point = [&out](const char* name, PlanarPoint p) {
    out += std::string("point,") + name + ',' + detail::format_compact(p.x) +
           ',' + detail::format_compact(p.y) + ",,\n";
  };
  auto segment = [&out](const char* name, PlanarPoint a, PlanarPoint b) {
    out += std::string("segment,") + name + ',' + detail::format_compact(a.x) +
           ',' + detail::format_compact(a.y) + ',' + detail::format_compact(b.x) +
           ',' + detail::format_compact(b.y) + '\n';
  };
  auto length = [&out](const char* name, double v) {
    out += std::string("length,") + name + ',' + detail::format_compact(v) +
           ",,,\n";
  };
  point("O", f.o);
  point("A", f.a);
  point("B", f.b);
  point("C", f.c);
  point("P", f.p);
  segment("OB", f.o, f.b);
  segment("OA", f.o, f.a);
  segment("AB", f.a, f.b);
  segment("CP", f.c, f.p);
  length("OP", f.op);
  length("OC", f.oc);
  length("CP", f.cp);
  length("AB", f.ab);
  return out;
}

inline std::string frame_svg(const ConstructionFrame& f) {
  std::string out = detail::svg_open();
  for (const auto& leaf :
       detail::full_figure(f.variant, sample_curve(f.variant, 200)))
    detail::svg_polyline(out, leaf, "#1f77b4", 0.008);
  detail::svg_segment(out, f.o, f.b, "#2ca02c");
  detail::svg_segment(out, f.o, f.a, "#7f7f7f");
  detail::svg_segment(out, f.a, f.b, "#ff7f0e");
  detail::svg_segment(out, f.c, f.p, "#9467bd");
  detail::svg_marker(out, f.o, "O");
  detail::svg_marker(out, f.a, "A");
  detail::svg_marker(out, f.b, "B");
  detail::svg_marker(out, f.c, "C");
  detail::svg_marker(out, f.p, "P");
  out += "</svg>\n";
  return out;
}

}  // namespace leaffun
