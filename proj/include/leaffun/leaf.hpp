#pragma once

// Leaf functions sleaf_n and cleaf_n.
//
// For order n >= 1 these are the solutions of r'' = -n r^(2n-1) with
// r(0) = 0, r'(0) = 1 (sleaf) and r(0) = 1, r'(0) = 0 (cleaf).  On the
// principal quarter period [0, pi_n/2] they invert the integrals
//
//   arcsleaf_n(r) = integral of (1 - t^(2n))^(-1/2) over [0, r]
//   arccleaf_n(r) = integral of (1 - t^(2n))^(-1/2) over [r, 1]
//
// and pi_n is twice the full integral over [0, 1].  n = 1 reduces the
// whole family to sin/cos with pi_1 = pi; n = 2 gives the lemniscatic
// case used by the geometry layer.
//
// Forward evaluation inverts the monotone arc integral with a bracketed
// secant iteration, then extends the quarter-period values to all real
// phases with the symmetry rules (even/odd at 0, reflection at pi_n/2,
// antiperiod pi_n), which the ODE-based tests confirm independently.

#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "quadrature.hpp"

namespace leaffun {

// Validated order parameter; keeps raw ints out of the numeric interfaces.
class LeafOrder {
 public:
  explicit LeafOrder(int n) : n_(n) {
    if (n < 1)
      throw std::domain_error("LeafOrder: order must be a positive integer, got " +
                              std::to_string(n));
  }
  int value() const noexcept { return n_; }
  friend bool operator==(LeafOrder a, LeafOrder b) noexcept { return a.n_ == b.n_; }

 private:
  int n_;
};

enum class LeafKind { Sleaf, Cleaf };

inline const char* to_string(LeafKind k) noexcept {
  return k == LeafKind::Sleaf ? "sleaf" : "cleaf";
}

// A forward evaluation: the phase it was evaluated at, the function value,
// and the derivative d(value)/d(phase).
struct LeafEval {
  double phase;
  double value;
  double derivative;
};

namespace detail {

// 1 - x^(2n) evaluated as (1-x)(1+x)(1 + x^2 + ... + x^(2(n-1))), which
// keeps full precision when 1-x is supplied exactly and x is near 1.
inline double one_minus_pow2n(double x, double one_minus_x, int n) {
  const double x2 = x * x;
  double geom = 1.0;
  double p = 1.0;
  for (int k = 1; k < n; ++k) {
    p *= x2;
    geom += p;
  }
  return one_minus_x * (1.0 + x) * geom;
}

// x^(2n-1) = x * (x^2)^(n-1); exact zero at x = 0 for every order.
inline double pow2n_minus_1(double x, int n) {
  double p = 1.0;
  double s = x * x;
  int e = n - 1;
  while (e > 0) {
    if (e & 1) p *= s;
    s *= s;
    e >>= 1;
  }
  return x * p;
}

// Integrand of the arc integrals on [a, b] within [0, 1], in the
// endpoint-aware form the quadrature understands: the distance argument
// reconstructs 1 - x without cancellation even when x has rounded to 1.
inline auto make_arc_integrand(int n, double a, double b) {
  return [n, a, b](double x, double xc) {
    const double one_minus_x = (xc > 0.0) ? (1.0 - a) - xc : (1.0 - b) - xc;
    return 1.0 / std::sqrt(one_minus_pow2n(x, one_minus_x, n));
  };
}

}  // namespace detail

// Integrand r -> (1 - r^(2n))^(-1/2) of the arc integrals, on (-1, 1).
inline double inverse_leaf_integrand(LeafOrder n, double t) {
  const double m = std::abs(t);
  if (!(m < 1.0))
    throw std::domain_error(
        "inverse_leaf_integrand: |t| must be < 1, got t = " + std::to_string(t));
  return 1.0 / std::sqrt(detail::one_minus_pow2n(m, 1.0 - m, n.value()));
}

// Quarter-period constant pi_n = 2 * integral of the arc integrand over
// [0, 1].  Computed once per order and cached; safe under concurrent
// first access (a duplicated computation yields the identical value).
inline double pi_n(LeafOrder n) {
  static std::mutex mutex;
  static std::unordered_map<int, double> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n.value());
    if (it != cache.end()) return it->second;
  }
  const double value =
      2.0 * integrate_checked(detail::make_arc_integrand(n.value(), 0.0, 1.0), 0.0, 1.0);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(n.value(), value).first->second;
}

// Arc length along the unit leaf from r out to 1; decreasing from
// pi_n/2 at r = 0 to 0 at r = 1.
inline double arccleaf(LeafOrder n, double r) {
  if (!(r >= 0.0 && r <= 1.0))
    throw std::domain_error("arccleaf: r must lie in [0, 1], got r = " +
                            std::to_string(r));
  if (r == 1.0) return 0.0;
  return integrate_checked(detail::make_arc_integrand(n.value(), r, 1.0), r, 1.0);
}

// Arc length from 0 out to r; increasing from 0 to pi_n/2 at r = 1.
inline double arcsleaf(LeafOrder n, double r) {
  if (!(r >= 0.0 && r <= 1.0))
    throw std::domain_error("arcsleaf: r must lie in [0, 1], got r = " +
                            std::to_string(r));
  if (r == 0.0) return 0.0;
  return integrate_checked(detail::make_arc_integrand(n.value(), 0.0, r), 0.0, r);
}

namespace detail {

// Bracketed secant iteration (Illinois variant) for a monotone residual
// with known endpoint values.  Falls back to bisection whenever the
// secant step would leave the bracket.
template <class G>
double solve_monotone(G&& g, double lo, double hi, double g_lo, double g_hi,
                      double residual_tol) {
  int stalled_side = 0;
  for (int it = 0; it < 200; ++it) {
    if (hi - lo <= 2.0 * std::numeric_limits<double>::epsilon() * (1.0 + hi)) break;
    double x = 0.5 * (lo + hi);
    const double denom = g_lo - g_hi;
    if (denom != 0.0) {
      const double secant = (g_lo * hi - g_hi * lo) / denom;
      if (secant > lo && secant < hi) x = secant;
    }
    const double gx = g(x);
    if (std::abs(gx) <= residual_tol) return x;
    if ((gx < 0.0) == (g_lo < 0.0)) {
      lo = x;
      g_lo = gx;
      if (stalled_side == -1) g_hi *= 0.5;  // unstick one-sided convergence
      stalled_side = -1;
    } else {
      hi = x;
      g_hi = gx;
      if (stalled_side == +1) g_lo *= 0.5;
      stalled_side = +1;
    }
  }
  return 0.5 * (lo + hi);
}

// How a phase folds back onto the principal quarter period [0, pi_n/2]:
// value = value_sign * f(l0), derivative = value_sign * slope_sign * f'(l0).
struct PhaseFold {
  double l0;
  double value_sign;
  double slope_sign;
};

inline PhaseFold fold_phase(double l, double half_pi_n, LeafKind kind) {
  const double pi_full = 2.0 * half_pi_n;
  double x = std::fmod(l, 2.0 * pi_full);  // one period
  if (x < 0.0) x += 2.0 * pi_full;
  PhaseFold fold{x, 1.0, 1.0};
  if (fold.l0 >= pi_full) {  // antiperiod: f(l + pi_n) = -f(l)
    fold.l0 -= pi_full;
    fold.value_sign = -fold.value_sign;
  }
  if (fold.l0 > half_pi_n) {  // reflect about pi_n/2
    fold.l0 = pi_full - fold.l0;
    fold.slope_sign = -fold.slope_sign;
    if (kind == LeafKind::Cleaf) fold.value_sign = -fold.value_sign;
  }
  return fold;
}

// Principal-branch value in [0, 1] for a phase already folded to
// [0, half_pi_n]: inverts the matching arc integral.
inline double principal_value(int n, LeafKind kind, double l0, double half_pi_n) {
  constexpr double residual_tol = 1e-12;
  const LeafOrder order(n);
  if (kind == LeafKind::Cleaf) {
    if (l0 <= 0.0) return 1.0;
    if (l0 >= half_pi_n) return 0.0;
    return solve_monotone([&](double r) { return arccleaf(order, r) - l0; }, 0.0,
                          1.0, half_pi_n - l0, -l0, residual_tol);
  }
  if (l0 <= 0.0) return 0.0;
  if (l0 >= half_pi_n) return 1.0;
  return solve_monotone([&](double r) { return arcsleaf(order, r) - l0; }, 0.0, 1.0,
                        -l0, half_pi_n - l0, residual_tol);
}

inline LeafEval eval_leaf(LeafOrder n, LeafKind kind, double l) {
  const double half = 0.5 * pi_n(n);
  const PhaseFold fold = fold_phase(l, half, kind);
  const double r0 = principal_value(n.value(), kind, fold.l0, half);
  // |f'| = sqrt(1 - f^(2n)) from the first integral of the defining ODE;
  // the clamp absorbs the r0 = 1 rounding case.
  const double slope_mag =
      std::sqrt(std::max(0.0, one_minus_pow2n(r0, 1.0 - r0, n.value())));
  const double slope_dir = (kind == LeafKind::Cleaf) ? -1.0 : 1.0;
  return {l, fold.value_sign * r0,
          fold.value_sign * fold.slope_sign * slope_dir * slope_mag};
}

}  // namespace detail

// Forward evaluations at any real phase.
inline LeafEval cleaf(LeafOrder n, double l) {
  return detail::eval_leaf(n, LeafKind::Cleaf, l);
}

inline LeafEval sleaf(LeafOrder n, double l) {
  return detail::eval_leaf(n, LeafKind::Sleaf, l);
}

inline LeafEval eval_leaf(LeafOrder n, LeafKind kind, double l) {
  return detail::eval_leaf(n, kind, l);
}

// d/dl of the chosen leaf function at phase l.
inline double leaf_derivative(LeafOrder n, LeafKind kind, double l) {
  return detail::eval_leaf(n, kind, l).derivative;
}

}  // namespace leaffun
