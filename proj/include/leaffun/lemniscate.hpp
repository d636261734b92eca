#pragma once

// Lemniscate of Bernoulli in its two unit-scale poses, and the geometric
// apparatus that ties the order-2 leaf functions to it.
//
// Horizontal pose: (x^2+y^2)^2 = x^2 - y^2, vertex A = (1, 0), foci at
// (+-1/sqrt2, 0), polar form r^2 = cos(2 theta).  The moving point P sits
// at radius r = cleaf_2(l) and angle theta = arctan(sleaf_2(l)), where l
// is the arc length from A to P.
//
// Diagonal pose: (x^2+y^2)^2 = 2xy, the same curve rotated 45 degrees;
// vertex A = (1/sqrt2, 1/sqrt2), foci at +-(1/2, 1/2), polar form
// r^2 = sin(2 theta).  Here r = sleaf_2(l) and
// theta = pi/4 - arctan(cleaf_2(l)), with l measured from the origin.
//
// Both poses carry a ruler-and-compass style construction frame (points
// O, A, B, C, P) whose similar triangles and Pythagorean relation combine
// into the identity s^2 + c^2 + s^2 c^2 = 1.  The frame functions return
// every point and length so tests can check each relation separately.

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "identities.hpp"
#include "leaf.hpp"
#include "quadrature.hpp"

namespace leaffun {

enum class LemniscateVariant { Horizontal, Diagonal };

inline const char* to_string(LemniscateVariant v) noexcept {
  return v == LemniscateVariant::Horizontal ? "horizontal" : "diagonal";
}

struct PlanarPoint {
  double x;
  double y;
};

inline double distance(const PlanarPoint& a, const PlanarPoint& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

// Left side of the implicit equation; zero exactly on the curve.
inline double implicit_residual(LemniscateVariant v, const PlanarPoint& p) {
  const double q = p.x * p.x + p.y * p.y;
  if (v == LemniscateVariant::Horizontal)
    return q * q - (p.x * p.x - p.y * p.y);
  return q * q - 2.0 * p.x * p.y;
}

// Radius of the curve at polar angle theta, on the branch through the
// vertex.  The radicand cos(2 theta) (resp. sin(2 theta)) must be
// nonnegative; a whisker of rounding slack is absorbed.
inline double polar_radius(LemniscateVariant v, double theta) {
  const double radicand = (v == LemniscateVariant::Horizontal)
                              ? std::cos(2.0 * theta)
                              : std::sin(2.0 * theta);
  if (radicand < -1e-12)
    throw std::domain_error(
        std::string("polar_radius: no ") + to_string(v) +
        " branch at theta = " + std::to_string(theta) +
        (v == LemniscateVariant::Horizontal
             ? " (needs cos(2 theta) >= 0)"
             : " (needs sin(2 theta) >= 0)"));
  return std::sqrt(std::max(radicand, 0.0));
}

inline std::pair<PlanarPoint, PlanarPoint> foci(LemniscateVariant v) {
  constexpr double half_sqrt2 = std::numbers::sqrt2 / 2.0;
  if (v == LemniscateVariant::Horizontal)
    return {{half_sqrt2, 0.0}, {-half_sqrt2, 0.0}};
  return {{0.5, 0.5}, {-0.5, -0.5}};
}

// Curve point at arc length l from the vertex (horizontal) or from the
// origin (diagonal), on the principal branch l in [0, pi_2/2].
inline PlanarPoint point_on_curve(LemniscateVariant v, double l) {
  if (v == LemniscateVariant::Horizontal) {
    const double r = cleaf(detail::kOrder2, l).value;
    const double theta = theta_from_l_cleaf(l);
    return {r * std::cos(theta), r * std::sin(theta)};
  }
  const double r = sleaf(detail::kOrder2, l).value;
  const double theta = theta_from_l_sleaf(l);
  return {r * std::cos(theta), r * std::sin(theta)};
}

// Distances from the curve point at arc length l to the two foci, via
// the closed forms; the product of the pair is 1/2 everywhere on the
// curve (the defining property, with half focal separation 1/sqrt2).
inline std::pair<double, double> focal_chords(LemniscateVariant v, double l) {
  if (v == LemniscateVariant::Horizontal) {
    const double c = cleaf(detail::kOrder2, l).value;
    const double theta = theta_from_l_cleaf(l);
    const double base = 0.5 + c * c;
    const double cross = std::numbers::sqrt2 * std::cos(theta) * c;
    return {std::sqrt(std::max(base - cross, 0.0)), std::sqrt(base + cross)};
  }
  const double s = sleaf(detail::kOrder2, l).value;
  const double theta = theta_from_l_sleaf(l);
  const double base = 0.5 + s * s;
  const double cross = (std::sin(theta) + std::cos(theta)) * s;
  return {std::sqrt(std::max(base - cross, 0.0)), std::sqrt(base + cross)};
}

// Arc length of the curve between radius r and the measuring origin of
// the pose: from the vertex inward for the horizontal pose (radius
// decreases along the arc), from the origin outward for the diagonal one.
// These are exactly arccleaf_2 and arcsleaf_2.
inline double arclength_from_radius(LemniscateVariant v, double r) {
  if (!(r >= 0.0 && r <= 1.0))
    throw std::domain_error("arclength_from_radius: r must lie in [0, 1], got r = " +
                            std::to_string(r));
  return (v == LemniscateVariant::Horizontal) ? arccleaf(detail::kOrder2, r)
                                              : arcsleaf(detail::kOrder2, r);
}

// The same arc length by the polar route ds = sqrt(r^2 + (dr/dtheta)^2)
// dtheta, which collapses to ds = dtheta / sqrt(cos 2 theta) (horizontal)
// and dtheta / sqrt(sin 2 theta) (diagonal).  Shares no code with the
// radius route, so agreement between the two is a real cross-check.
inline double arclength_polar_direct(LemniscateVariant v, double r) {
  if (!(r >= 0.0 && r <= 1.0))
    throw std::domain_error(
        "arclength_polar_direct: r must lie in [0, 1], got r = " +
        std::to_string(r));
  constexpr double quarter_pi = std::numbers::pi / 4.0;
  if (v == LemniscateVariant::Horizontal) {
    // theta runs from 0 (vertex) to arccos(r^2)/2; the integrand blows up
    // at pi/4, reached only when r = 0
    const double theta_r = 0.5 * std::acos(r * r);
    if (theta_r == 0.0) return 0.0;
    const double a = 0.0;
    const double b = theta_r;
    auto ds = [a, b](double, double uc) {
      // distance from the node to pi/4, assembled without cancellation;
      // cos(2u) = sin(2 * that distance)
      const double gap = (uc > 0.0) ? (quarter_pi - a) - uc : (quarter_pi - b) - uc;
      return 1.0 / std::sqrt(std::sin(2.0 * gap));
    };
    return integrate_checked(ds, a, b);
  }
  // diagonal: theta runs from 0 (origin) to arcsin(r^2)/2; the integrand
  // blows up at 0, where the node positions are exact anyway
  const double theta_r = 0.5 * std::asin(r * r);
  if (theta_r == 0.0) return 0.0;
  auto ds = [](double u) { return 1.0 / std::sqrt(std::sin(2.0 * u)); };
  return integrate_checked(ds, 0.0, theta_r);
}

// The figure's construction frame at arc length l: O the origin, A the
// vertex, P the moving curve point, C the foot of the perpendicular from
// P onto the axis OA, B the intersection of ray OP with the tangent line
// through A.  Lengths are stored alongside the points.
struct ConstructionFrame {
  LemniscateVariant variant;
  double phase;   // arc length l
  double theta;   // polar angle of P
  PlanarPoint o, a, b, c, p;
  double op, oc, cp, ab;
};

// Horizontal pose: A = (1,0), C on the x axis, B on the line x = 1.
// Degenerates at l = 0 (P = A, B = A) and l = pi_2/2 (P = O), so only
// interior phases are accepted.
inline ConstructionFrame construction_frame_horizontal(double l) {
  const double half = 0.5 * pi_n(detail::kOrder2);
  if (!(l > 0.0 && l < half))
    throw std::domain_error(
        "construction_frame_horizontal: frame degenerates at the branch ends; "
        "l must lie strictly inside (0, pi_2/2), got l = " +
        std::to_string(l));
  const double c = cleaf(detail::kOrder2, l).value;
  const double s = sleaf(detail::kOrder2, l).value;
  const double theta = std::atan(s);
  const PlanarPoint p{c * std::cos(theta), c * std::sin(theta)};
  ConstructionFrame f{LemniscateVariant::Horizontal,
                      l,
                      theta,
                      {0.0, 0.0},
                      {1.0, 0.0},
                      {1.0, s},
                      {p.x, 0.0},
                      p,
                      0.0, 0.0, 0.0, 0.0};
  f.op = std::hypot(p.x, p.y);
  f.oc = p.x;
  f.cp = p.y;
  f.ab = s;
  return f;
}

// Diagonal pose: A = (1/sqrt2, 1/sqrt2), C the foot of the perpendicular
// from P onto the diagonal y = x, B the intersection of ray OP with the
// tangent line y = -x + sqrt2 through A.
inline ConstructionFrame construction_frame_diagonal(double l) {
  const double half = 0.5 * pi_n(detail::kOrder2);
  if (!(l > 0.0 && l < half))
    throw std::domain_error(
        "construction_frame_diagonal: frame degenerates at the branch ends; "
        "l must lie strictly inside (0, pi_2/2), got l = " +
        std::to_string(l));
  const double s = sleaf(detail::kOrder2, l).value;
  const double theta = theta_from_l_sleaf(l);
  const double cos_t = std::cos(theta);
  const double sin_t = std::sin(theta);
  const PlanarPoint p{s * cos_t, s * sin_t};
  const double t = 0.5 * (p.x + p.y);  // C = (t, t)
  const double reach = std::numbers::sqrt2 / (cos_t + sin_t);
  constexpr double half_sqrt2 = std::numbers::sqrt2 / 2.0;
  ConstructionFrame f{LemniscateVariant::Diagonal,
                      l,
                      theta,
                      {0.0, 0.0},
                      {half_sqrt2, half_sqrt2},
                      {reach * cos_t, reach * sin_t},
                      {t, t},
                      p,
                      0.0, 0.0, 0.0, 0.0};
  f.op = std::hypot(p.x, p.y);
  f.oc = std::numbers::sqrt2 * t;
  f.cp = distance(f.c, p);
  f.ab = distance(f.a, f.b);
  return f;
}

inline ConstructionFrame construction_frame(LemniscateVariant v, double l) {
  return v == LemniscateVariant::Horizontal ? construction_frame_horizontal(l)
                                            : construction_frame_diagonal(l);
}

// Closed forms for the frame lengths, obtained from the similar triangles
// OAB ~ OCP of each figure.  The frame functions above never use these,
// so residuals between the two routes are meaningful checks.

// Horizontal OC = c sqrt(1 - c^2) / (sqrt2 s).
inline double horizontal_oc_closed_form(double l) {
  const double c = cleaf(detail::kOrder2, l).value;
  const double s = sleaf(detail::kOrder2, l).value;
  if (s == 0.0)
    throw std::domain_error("horizontal_oc_closed_form: undefined at l = 0");
  return c * std::sqrt(std::max(1.0 - c * c, 0.0)) / (std::numbers::sqrt2 * s);
}

// Horizontal CP = c s / sqrt(1 + s^2).
inline double horizontal_cp_closed_form(double l) {
  const double c = cleaf(detail::kOrder2, l).value;
  const double s = sleaf(detail::kOrder2, l).value;
  return c * s / std::sqrt(1.0 + s * s);
}

// Second factor left over when the horizontal frame's Pythagorean
// relation is factorized down to s^2 + c^2 + s^2 c^2 - 1.  The
// factorization argument needs this cofactor to be nonzero; along the
// curve it is, except for a single zero inside the branch (at
// s^2 = (sqrt(33) - 5)/4), where continuity closes the gap.  The tests
// pin down both the factorization and that zero.
inline double frame_identity_cofactor(double l) {
  const double s = sleaf(detail::kOrder2, l).value;
  const double c = cleaf(detail::kOrder2, l).value;
  const double s2 = s * s, s4 = s2 * s2, s6 = s4 * s2;
  const double c2 = c * c, c4 = c2 * c2;
  return 2.0 * s2 + 6.0 * s4 + 4.0 * s6 - c2 * (1.0 + 3.0 * s2 + 4.0 * s4) +
         c4 * (1.0 + s2);
}

// Intersections of the diagonal-pose curve with the chord line
// y = -x + 2t (the line through C = (t, t) perpendicular to the axis).
// Eliminating y gives a quartic in x that factors into two quadratics;
// one pair of roots is always complex (its radicand stays negative), the
// other pair is real and symmetric about x = t.
struct DiagonalChordRoots {
  std::array<double, 2> x;    // real roots, increasing; P takes the larger
  double radicand;            // -1 - 4t^2 + sqrt(1 + 16t^2), >= 0 on the branch
  double complex_radicand;    // -1 - 4t^2 - sqrt(1 + 16t^2), always < 0
};

inline DiagonalChordRoots intersect_diagonal_line(double t) {
  constexpr double half_sqrt2 = std::numbers::sqrt2 / 2.0;
  if (!(t > 0.0 && t <= half_sqrt2 + 1e-12))
    throw std::domain_error(
        "intersect_diagonal_line: t must lie in (0, 1/sqrt2], got t = " +
        std::to_string(t));
  const double inner = std::sqrt(1.0 + 16.0 * t * t);
  const double raw = -1.0 - 4.0 * t * t + inner;
  // raw dips an ulp below zero when t sits at the vertex value 1/sqrt2
  const double radicand = std::max(raw, 0.0);
  const double span = 0.5 * std::sqrt(radicand);
  return {{t - span, t + span}, radicand, -1.0 - 4.0 * t * t - inner};
}

// Diagonal CP by the chord quartic: (1/sqrt2) sqrt(-1 - 4t^2 + sqrt(1+16t^2)).
inline double diagonal_cp_closed_form(double t) {
  constexpr double half_sqrt2 = std::numbers::sqrt2 / 2.0;
  if (!(t > 0.0 && t <= half_sqrt2 + 1e-12))
    throw std::domain_error(
        "diagonal_cp_closed_form: t must lie in (0, 1/sqrt2], got t = " +
        std::to_string(t));
  const double raw = -1.0 - 4.0 * t * t + std::sqrt(1.0 + 16.0 * t * t);
  return std::sqrt(std::max(raw, 0.0)) / std::numbers::sqrt2;
}

// Diagonal OP^2 by Pythagoras in the chord variables:
// s^2 = (-1 - 4t^2 + sqrt(1+16t^2))/2 + 2t^2.
inline double diagonal_op_squared_closed_form(double t) {
  const double raw = -1.0 - 4.0 * t * t + std::sqrt(1.0 + 16.0 * t * t);
  return 0.5 * std::max(raw, 0.0) + 2.0 * t * t;
}

}  // namespace leaffun
