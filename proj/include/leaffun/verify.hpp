#pragma once

// Self-check battery: every relation the library promises, phrased as a
// residual sweep and bundled into IdentityReports.  The CLI's verify
// subcommand runs the whole battery; tests reuse individual pieces.
//
// Every check here reaches 1e-8 comfortably in double precision, so the
// battery as a whole can be held to that tolerance.  Derivative checks
// that rely on finite differences live in the test suite instead, where
// their intrinsically looser tolerance does not water down this battery.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "identities.hpp"
#include "lemniscate.hpp"
#include "ode.hpp"

namespace leaffun {

namespace detail {

// Max |residual| over `samples` points placed strictly inside (lo, hi);
// interior placement keeps frame checks away from their degenerate ends.
template <class F>
IdentityReport sweep_interval(std::string name, double lo, double hi, int samples,
                              F&& residual) {
  IdentityReport rep{std::move(name), 0.0, samples, lo, hi};
  for (int i = 0; i < samples; ++i) {
    const double x = lo + (hi - lo) * (i + 1.0) / (samples + 1.0);
    rep.max_abs_residual = std::max(rep.max_abs_residual, std::abs(residual(x)));
  }
  return rep;
}

}  // namespace detail

// Runs the full battery with `samples` points per sweep.
inline std::vector<IdentityReport> run_identity_checks(int samples) {
  if (samples < 1)
    throw std::invalid_argument("run_identity_checks: samples must be >= 1");

  using V = LemniscateVariant;
  const double half = 0.5 * pi_n(detail::kOrder2);
  const double two_periods = 4.0 * half;  // [0, 2 pi_2], extension included
  std::vector<IdentityReport> out;
  out.reserve(18);

  out.push_back(detail::sweep_interval("pythagorean identity", 0.0, two_periods,
                                       samples, pythagorean_residual));

  out.push_back(detail::sweep_interval("double angle, horizontal", 0.0, half,
                                       samples, double_angle_relation_c));
  out.push_back(detail::sweep_interval("double angle, diagonal", 0.0, half,
                                       samples, double_angle_relation_s));

  out.push_back(detail::sweep_interval(
      "tangent relations", 0.0, half, samples, [](double l) {
        const auto [st, ct] = tan_relations(l);
        return std::max(std::abs(st), std::abs(ct));
      }));

  for (V v : {V::Horizontal, V::Diagonal}) {
    out.push_back(detail::sweep_interval(
        std::string("curve membership, ") + to_string(v), 0.0, half, samples,
        [v](double l) { return implicit_residual(v, point_on_curve(v, l)); }));
  }

  for (V v : {V::Horizontal, V::Diagonal}) {
    out.push_back(detail::sweep_interval(
        std::string("focal product, ") + to_string(v), 0.0, half, samples,
        [v](double l) {
          const auto [near_chord, far_chord] = focal_chords(v, l);
          return near_chord * far_chord - 0.5;
        }));
    out.push_back(detail::sweep_interval(
        std::string("focal chords closed vs direct, ") + to_string(v), 0.0, half,
        samples, [v](double l) {
          const auto [near_chord, far_chord] = focal_chords(v, l);
          const auto [f1, f2] = foci(v);
          const PlanarPoint p = point_on_curve(v, l);
          return std::max(std::abs(near_chord - distance(p, f1)),
                          std::abs(far_chord - distance(p, f2)));
        }));
  }

  out.push_back(detail::sweep_interval(
      "arc length round trip, horizontal", 0.0, half, samples, [](double l) {
        return arclength_from_radius(V::Horizontal,
                                     cleaf(detail::kOrder2, l).value) -
               l;
      }));
  out.push_back(detail::sweep_interval(
      "arc length round trip, diagonal", 0.0, half, samples, [](double l) {
        return arclength_from_radius(V::Diagonal, sleaf(detail::kOrder2, l).value) -
               l;
      }));

  for (V v : {V::Horizontal, V::Diagonal}) {
    out.push_back(detail::sweep_interval(
        std::string("arc length dual route, ") + to_string(v), 0.0, 1.0, samples,
        [v](double r) {
          return arclength_polar_direct(v, r) - arclength_from_radius(v, r);
        }));
  }

  out.push_back(detail::sweep_interval(
      "cumulative integral vs arctan, horizontal", 0.0, half, samples,
      [](double l) {
        return cumulative_leaf_integral(LeafKind::Cleaf, l) - theta_from_l_cleaf(l);
      }));
  out.push_back(detail::sweep_interval(
      "cumulative integral vs arctan, diagonal", 0.0, half, samples,
      [](double l) {
        return cumulative_leaf_integral(LeafKind::Sleaf, l) - theta_from_l_sleaf(l);
      }));

  out.push_back(detail::sweep_interval(
      "construction frame, horizontal", 0.0, half, samples, [](double l) {
        const ConstructionFrame f = construction_frame_horizontal(l);
        const double c = cleaf(detail::kOrder2, l).value;
        const double s = sleaf(detail::kOrder2, l).value;
        const double oc2 = f.oc * f.oc, cp2 = f.cp * f.cp;
        double r = std::abs((oc2 + cp2) * (oc2 + cp2) - (oc2 - cp2));
        r = std::max(r, std::abs(f.oc - horizontal_oc_closed_form(l)));
        r = std::max(r, std::abs(f.cp - horizontal_cp_closed_form(l)));
        r = std::max(r, std::abs(f.op - c));
        r = std::max(r, std::abs(f.ab - s));
        // similar triangles OAB ~ OCP: OC*AB = OA*CP and OP*BA = PC*OB
        r = std::max(r, std::abs(f.oc * f.ab - f.cp));
        r = std::max(r, std::abs(f.op * f.ab - f.cp * std::hypot(1.0, f.ab)));
        return r;
      }));

  out.push_back(detail::sweep_interval(
      "construction frame, diagonal", 0.0, half, samples, [](double l) {
        const ConstructionFrame f = construction_frame_diagonal(l);
        const double c = cleaf(detail::kOrder2, l).value;
        const double s = sleaf(detail::kOrder2, l).value;
        const double t = f.c.x;
        const DiagonalChordRoots roots = intersect_diagonal_line(t);
        double r = std::abs(f.p.x - roots.x[1]);
        r = std::max(r, std::abs(f.p.y - roots.x[0]));
        r = std::max(r, std::abs(f.cp - diagonal_cp_closed_form(t)));
        r = std::max(r, std::abs(f.op * f.op - (f.cp * f.cp + f.oc * f.oc)));
        r = std::max(r, std::abs(s * s - diagonal_op_squared_closed_form(t)));
        // similar triangles: OC*AB = OA*CP with OA = 1
        r = std::max(r, std::abs(std::numbers::sqrt2 * t * c - f.cp));
        r = std::max(r, std::abs(f.op - s));
        r = std::max(r, std::abs(f.ab - c));
        return r;
      }));

  {
    constexpr double half_sqrt2 = std::numbers::sqrt2 / 2.0;
    out.push_back(detail::sweep_interval(
        "chord quartic branches", 0.0, half_sqrt2, samples, [](double t) {
          const DiagonalChordRoots roots = intersect_diagonal_line(t);
          // the other quadratic pair must stay complex, the real pair must
          // be ordered and land on both the curve and the chord line
          double r = roots.complex_radicand < 0.0 ? 0.0 : 1.0;
          r = std::max(r, roots.x[1] >= roots.x[0] ? 0.0 : 1.0);
          for (double x : roots.x) {
            const PlanarPoint q{x, 2.0 * t - x};
            r = std::max(r, std::abs(implicit_residual(LemniscateVariant::Diagonal, q)));
          }
          return r;
        }));
  }

  {
    IdentityReport rep{"ode energy invariant", 0.0, 0, 0.0, 0.0};
    for (int order = 1; order <= 3; ++order) {
      const LeafOrder n(order);
      rep.domain_hi = std::max(rep.domain_hi, pi_n(n));
      for (LeafKind kind : {LeafKind::Sleaf, LeafKind::Cleaf}) {
        const OdeTrajectory traj = ode_trajectory(n, kind, pi_n(n), 1e-3);
        for (const OdeSample& smp : traj.samples)
          rep.max_abs_residual =
              std::max(rep.max_abs_residual, std::abs(ode_energy(n, smp) - 1.0));
        rep.sample_count += static_cast<int>(traj.samples.size());
      }
    }
    out.push_back(std::move(rep));
  }

  return out;
}

}  // namespace leaffun
