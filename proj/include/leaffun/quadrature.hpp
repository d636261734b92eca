#pragma once

// Tanh-sinh (double-exponential) quadrature on a finite interval.
//
// The substitution x = tanh((pi/2) sinh u) maps (a, b) to the whole real
// line and makes the trapezoidal rule converge double-exponentially, even
// when the integrand has integrable endpoint singularities such as
// (b - x)^(-1/2).  Refinement proceeds in levels: level L uses spacing
// 2^-L in u and reuses every node already evaluated, so the cost of the
// final level dominates.  The difference between the last two levels
// serves as the error estimate.
//
// Integrands may take either form:
//
//   double f(double x);
//   double f(double x, double xc);
//
// where xc is the signed distance from x to the nearer endpoint (x - a on
// the left half of the interval, x - b on the right).  xc is produced
// directly by the node map, without the cancellation that computing
// b - x in the caller would suffer, so the two-argument form can resolve
// endpoint singularities down to distances around 1e-280.  A
// single-argument integrand is limited near a singular endpoint by the
// spacing of doubles around that endpoint, which caps the achievable
// absolute error near sqrt(eps) ~ 1e-8; nodes that round onto the
// endpoint itself are skipped in that mode.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace leaffun {

struct QuadratureConfig {
  double target_abs_tol = 1e-13;  // stop refining once levels agree this well
  int max_level = 12;             // last refinement level (spacing 2^-max_level)
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // |last level - previous level|
  std::int64_t evaluations = 0;
  bool converged = false;
};

// Thrown by integrate_checked when refinement stalls; carries the best
// estimate so callers can still inspect how far off it was.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, const QuadratureResult& best)
      : std::runtime_error(what), best_(best) {}
  const QuadratureResult& best() const noexcept { return best_; }

 private:
  QuadratureResult best_;
};

namespace detail {

// One abscissa of the u >= 0 half of the tanh-sinh map:
//   offset(u) = 1 - tanh((pi/2) sinh u) = 2e / (1 + e),  e = exp(-pi sinh u)
//   weight(u) = (pi/2) cosh(u) / cosh^2((pi/2) sinh u) = (pi/2) cosh(u) * 4e / (1+e)^2
// The offset form avoids the cancellation in 1 - tanh(y) and stays exact
// down to the underflow threshold.
struct TsPoint {
  double offset;  // distance from the node to the near end of (-1, 1)
  double weight;
};

inline TsPoint ts_point(double u) {
  constexpr double half_pi = 1.5707963267948966;
  const double e = std::exp(-2.0 * half_pi * std::sinh(u));
  const double denom = 1.0 + e;
  return {2.0 * e / denom, half_pi * std::cosh(u) * 4.0 * e / (denom * denom)};
}

// Nodes beyond |u| = 6 underflow to the interval endpoints in double
// precision; weights there are < 1e-270 so nothing of value is lost.
inline constexpr double ts_u_max = 6.0;

template <class F>
inline constexpr bool is_endpoint_aware_v =
    std::is_invocable_r_v<double, F&, double, double>;

template <class F>
inline constexpr bool is_plain_integrand_v =
    std::is_invocable_r_v<double, F&, double>;

}  // namespace detail

// Integrates f over [a, b].  Never returns a silently bad value: the
// result carries a converged flag and the last inter-level difference.
template <class F>
QuadratureResult integrate(F&& f, double a, double b,
                           const QuadratureConfig& cfg = {}) {
  using FF = std::remove_reference_t<F>;
  static_assert(detail::is_endpoint_aware_v<FF> || detail::is_plain_integrand_v<FF>,
                "integrand must be callable as f(x) or f(x, xc)");

  if (!(a < b)) throw std::invalid_argument("integrate: requires a < b");
  if (!(cfg.target_abs_tol > 0.0))
    throw std::invalid_argument("integrate: target_abs_tol must be positive");
  if (cfg.max_level < 3 || cfg.max_level > 20)
    throw std::invalid_argument("integrate: max_level must lie in [3, 20]");

  const double halfwidth = 0.5 * (b - a);

  QuadratureResult res;

  auto eval = [&](double x, double xc) -> double {
    double v;
    if constexpr (detail::is_endpoint_aware_v<FF>) {
      v = f(x, xc);
    } else {
      v = f(x);
    }
    ++res.evaluations;
    if (!std::isfinite(v))
      throw std::domain_error(
          "integrate: integrand returned a non-finite value at x = " +
          std::to_string(x));
    return v;
  };

  // Sum of the integrand over the node pair at +-u, or the single center
  // node for u = 0.  Returns false once the node has underflowed onto an
  // endpoint, which ends the current level's sweep.
  auto pair_sum = [&](double u, double& out) -> bool {
    const auto [offset, weight] = detail::ts_point(u);
    const double dist = halfwidth * offset;
    if (!(dist > 0.0) || !(weight > 0.0)) return false;
    double s = 0.0;
    if (u == 0.0) {
      s = eval(a + dist, dist);  // center node, counted once
    } else {
      if constexpr (detail::is_endpoint_aware_v<FF>) {
        s = eval(b - dist, -dist) + eval(a + dist, dist);
      } else {
        const double xr = b - dist;
        const double xl = a + dist;
        if (xr < b) s += eval(xr, -dist);
        if (xl > a) s += eval(xl, dist);
      }
    }
    out = weight * s;
    return true;
  };

  // Per-term floor below which a level's tail no longer matters.  The
  // remaining tail has O(spacing^-1) terms, each under the floor, so the
  // discarded mass stays three orders below the target tolerance.
  const double term_floor = cfg.target_abs_tol * 1e-3;

  double node_sum = 0.0;  // unscaled; integral at level L = halfwidth * 2^-L * node_sum
  double previous = 0.0;

  for (int level = 0; level <= cfg.max_level; ++level) {
    const double spacing = std::ldexp(1.0, -level);
    double level_sum = 0.0;
    double term = 0.0;
    int negligible_run = 0;
    if (level == 0) {
      for (double u = 0.0; u <= detail::ts_u_max; u += 1.0) {
        if (!pair_sum(u, term)) break;
        level_sum += term;
        if (halfwidth * std::abs(term) < term_floor && u >= 2.0) {
          if (++negligible_run >= 3) break;
        } else {
          negligible_run = 0;
        }
      }
    } else {
      // only the odd multiples of the new spacing are new nodes
      for (double u = spacing; u <= detail::ts_u_max; u += 2.0 * spacing) {
        if (!pair_sum(u, term)) break;
        level_sum += term;
        if (halfwidth * spacing * std::abs(term) < term_floor && u >= 2.0) {
          if (++negligible_run >= 3) break;
        } else {
          negligible_run = 0;
        }
      }
    }
    node_sum += level_sum;

    const double integral = halfwidth * spacing * node_sum;
    if (level >= 2) {
      res.error_estimate = std::abs(integral - previous);
      if (res.error_estimate <= cfg.target_abs_tol) {
        res.value = integral;
        res.converged = true;
        return res;
      }
    }
    previous = integral;
  }

  res.value = previous;
  return res;
}

// As integrate(), but non-convergence is an error instead of a flag.
template <class F>
double integrate_checked(F&& f, double a, double b,
                         const QuadratureConfig& cfg = {}) {
  QuadratureResult r = integrate(std::forward<F>(f), a, b, cfg);
  if (!r.converged)
    throw QuadratureError(
        "integrate: refinement stalled at error estimate " +
            std::to_string(r.error_estimate) + " (target " +
            std::to_string(cfg.target_abs_tol) + ")",
        r);
  return r.value;
}

}  // namespace leaffun
