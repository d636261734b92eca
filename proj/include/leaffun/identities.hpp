#pragma once

// Analytic relations tying sleaf_2 and cleaf_2 to the circular functions.
// Everything here is for order n = 2; the geometry layer builds on these.
//
// With s = sleaf_2(l), c = cleaf_2(l):
//
//   s^2 + c^2 + s^2 c^2 = 1                 (algebraic pythagorean form)
//   theta(l)     = arctan s  = integral of cleaf_2 over [0, l]
//   theta_bar(l) = pi/4 - arctan c = integral of sleaf_2 over [0, l]
//   c^2 = cos(2 theta),  s^2 = sin(2 theta_bar)
//   tan(theta) = s,  tan(pi/4 - theta_bar) = c
//
// The residual-style functions return a value that is identically zero in
// exact arithmetic, so callers can assert |residual| directly.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "leaf.hpp"
#include "quadrature.hpp"

namespace leaffun {

// Named residual sweep over a phase interval; produced by the check
// battery in verify.hpp and by the CLI's verify subcommand.
struct IdentityReport {
  std::string name;
  double max_abs_residual = 0.0;
  int sample_count = 0;
  double domain_lo = 0.0;
  double domain_hi = 0.0;

  bool passes(double tolerance) const noexcept {
    return max_abs_residual <= tolerance;
  }
};

namespace detail {

inline const LeafOrder kOrder2{2};

// Tiny slack so phases computed as pi_2/2 minus rounding still count as
// on-branch; anything further out is a genuine domain violation.
inline constexpr double kBranchSlack = 1e-12;

inline double require_principal_branch(double l, const char* who) {
  const double half = 0.5 * pi_n(kOrder2);
  if (l < -kBranchSlack || l > half + kBranchSlack)
    throw std::domain_error(std::string(who) +
                            ": l must lie on the principal branch [0, pi_2/2], got l = " +
                            std::to_string(l));
  return std::clamp(l, 0.0, half);
}

}  // namespace detail

// s^2 + c^2 + s^2 c^2 - 1 at phase l; valid on the whole real line.
inline double pythagorean_residual(double l) {
  const double s = sleaf(detail::kOrder2, l).value;
  const double c = cleaf(detail::kOrder2, l).value;
  return s * s + c * c + s * s * c * c - 1.0;
}

// Polar angle of the horizontal-lemniscate point at arc length l,
// measured from the positive x axis: theta = arctan(sleaf_2(l)).
inline double theta_from_l_cleaf(double l) {
  l = detail::require_principal_branch(l, "theta_from_l_cleaf");
  return std::atan(sleaf(detail::kOrder2, l).value);
}

// Polar angle of the diagonal-lemniscate point at arc length l, measured
// from the positive x axis: theta_bar = pi/4 - arctan(cleaf_2(l)).
inline double theta_from_l_sleaf(double l) {
  l = detail::require_principal_branch(l, "theta_from_l_sleaf");
  return 0.25 * std::numbers::pi - std::atan(cleaf(detail::kOrder2, l).value);
}

// The same angles obtained the slow way: quadrature of the forward leaf
// function from 0 to l, with no closed form involved.  Agreement with the
// arctan routes (to ~1e-8) is one of the cross-checks.
inline double cumulative_leaf_integral(LeafKind kind, double l) {
  l = detail::require_principal_branch(l, "cumulative_leaf_integral");
  if (l == 0.0) return 0.0;
  QuadratureConfig cfg;
  cfg.target_abs_tol = 1e-9;  // integrand evaluations are full inversions; 1e-9
  cfg.max_level = 9;          // suffices for the 1e-8 agreement contract
  return integrate_checked(
      [kind](double t) { return eval_leaf(detail::kOrder2, kind, t).value; }, 0.0,
      l, cfg);
}

// cleaf_2(l)^2 - cos(2 theta(l)); zero in exact arithmetic.
inline double double_angle_relation_c(double l) {
  const double c = cleaf(detail::kOrder2, l).value;
  return c * c - std::cos(2.0 * theta_from_l_cleaf(l));
}

// sleaf_2(l)^2 - sin(2 theta_bar(l)); zero in exact arithmetic.
inline double double_angle_relation_s(double l) {
  const double s = sleaf(detail::kOrder2, l).value;
  return s * s - std::sin(2.0 * theta_from_l_sleaf(l));
}

// Residuals of tan(theta) = sleaf_2 and tan(pi/4 - theta_bar) = cleaf_2.
inline std::pair<double, double> tan_relations(double l) {
  const double s = sleaf(detail::kOrder2, l).value;
  const double c = cleaf(detail::kOrder2, l).value;
  const double theta = theta_from_l_cleaf(l);
  const double theta_bar = theta_from_l_sleaf(l);
  return {std::tan(theta) - s, std::tan(0.25 * std::numbers::pi - theta_bar) - c};
}

}  // namespace leaffun
