#pragma once

// Independent oracle for the leaf functions: classical fixed-step RK4 on
// the defining second-order equation written as a first-order system,
//
//   r' = v,   v' = -n r^(2n-1),
//
// from the sleaf or cleaf initial conditions.  Nothing here touches the
// arc-integral route, so trajectory endpoints give a genuinely separate
// cross-check of the forward evaluations.

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "leaf.hpp"

namespace leaffun {

struct OdeSample {
  double phase;
  double value;       // r
  double derivative;  // v = r'
};

struct OdeTrajectory {
  LeafOrder order;
  LeafKind kind;
  double step;  // actual uniform step used
  std::vector<OdeSample> samples;

  const OdeSample& front() const { return samples.front(); }
  const OdeSample& back() const { return samples.back(); }
};

// Integrates from phase 0 to l_end with uniform steps no larger than
// max_step; the requested step is shrunk so the last sample lands exactly
// on l_end.  l_end = 0 yields just the initial sample.
inline OdeTrajectory ode_trajectory(LeafOrder n, LeafKind kind, double l_end,
                                    double max_step) {
  if (!(l_end >= 0.0))
    throw std::invalid_argument("ode_trajectory: l_end must be >= 0, got " +
                                std::to_string(l_end));
  if (!(max_step > 0.0) || max_step > 1e-3)
    throw std::invalid_argument(
        "ode_trajectory: step must lie in (0, 1e-3] to keep the RK4 error "
        "below the cross-check tolerances, got " +
        std::to_string(max_step));

  OdeTrajectory traj{n, kind, max_step, {}};

  double r = (kind == LeafKind::Cleaf) ? 1.0 : 0.0;
  double v = (kind == LeafKind::Cleaf) ? 0.0 : 1.0;
  traj.samples.push_back({0.0, r, v});
  if (l_end == 0.0) {
    traj.step = 0.0;
    return traj;
  }

  const auto steps = static_cast<long long>(std::ceil(l_end / max_step - 1e-12));
  const long long count = steps < 1 ? 1 : steps;
  const double h = l_end / static_cast<double>(count);
  traj.step = h;
  traj.samples.reserve(static_cast<std::size_t>(count) + 1);

  const int order = n.value();
  const double coeff = -static_cast<double>(order);
  auto accel = [order, coeff](double rr) {
    return coeff * detail::pow2n_minus_1(rr, order);
  };

  for (long long i = 0; i < count; ++i) {
    const double k1r = v;
    const double k1v = accel(r);
    const double k2r = v + 0.5 * h * k1v;
    const double k2v = accel(r + 0.5 * h * k1r);
    const double k3r = v + 0.5 * h * k2v;
    const double k3v = accel(r + 0.5 * h * k2r);
    const double k4r = v + h * k3v;
    const double k4v = accel(r + h * k3r);
    r += h / 6.0 * (k1r + 2.0 * k2r + 2.0 * k3r + k4r);
    v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    const double phase = (i + 1 == count) ? l_end : h * static_cast<double>(i + 1);
    traj.samples.push_back({phase, r, v});
  }
  return traj;
}

// Conserved quantity v^2 + r^(2n) of the leaf ODE; equals 1 on every
// trajectory started from the sleaf or cleaf initial conditions.
inline double ode_energy(LeafOrder n, const OdeSample& s) {
  const double r2n = detail::pow2n_minus_1(s.value, n.value()) * s.value;
  return s.derivative * s.derivative + r2n;
}

}  // namespace leaffun
