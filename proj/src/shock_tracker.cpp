/// @file shock_tracker.cpp
/// @brief Interface trackers.

#include "gpme/shock_tracker.hpp"

#include <cmath>

#include "gpme/errors.hpp"

namespace gpme {

ShockTracker make_exact_tracker(const ExactSolution& oracle) {
  ShockTracker t;
  t.kind = ShockTracker::Kind::Exact;
  t.oracle = oracle;
  t.xi = exact_shock_position(0.0, oracle);
  return t;
}

ShockTracker make_jump_tracker(double xi0) {
  ShockTracker t;
  t.kind = ShockTracker::Kind::JumpOde;
  t.xi = xi0;
  return t;
}

ShockTracker make_level_set_tracker(double xi0, const Grid& grid) {
  ShockTracker t;
  t.kind = ShockTracker::Kind::LevelSet;
  t.xi = xi0;
  t.phi.resize(grid.x.size());
  for (std::size_t j = 0; j < grid.x.size(); ++j) t.phi[j] = grid.x[j] - xi0;
  return t;
}

VelocityEstimate jump_velocity(const std::vector<double>& p, int i, double dx,
                               const CoefficientModel& model,
                               RightStencil stencil) {
  const int last = static_cast<int>(p.size()) - 1;
  if (i < 1 || i >= last) {
    throw NumericalError("jump_velocity: shock index out of stencil range");
  }
  VelocityEstimate v;
  if (stencil == RightStencil::Zero) {
    if (!(p[i] > 0.0)) {
      throw NumericalError("jump_velocity: requires p_i > 0 for the zero right state");
    }
    v.v_hat = model.k_max * (p[i - 1] - p[i]) / (dx * p[i]);
  } else {
    if (i + 3 > last) {
      throw NumericalError("jump_velocity: two-cells-right stencil exceeds the grid");
    }
    const double jump = p[i] - p[i + 2];
    if (std::abs(jump) < 1e-14) {
      throw NumericalError("jump_velocity: degenerate jump across the front");
    }
    const double flux_left = -model.k_max * (p[i] - p[i - 1]) / dx;
    const double flux_right = -model.k_min * (p[i + 3] - p[i + 2]) / dx;
    v.v_hat = (flux_left - flux_right) / jump;
  }
  return v;
}

void advance_jump_ode(ShockTracker& tracker, const VelocityEstimate& v, double dt) {
  tracker.xi += dt * v.v_hat;
}

double level_set_zero_crossing(const std::vector<double>& phi, const Grid& grid) {
  const int last = static_cast<int>(phi.size()) - 1;
  for (int j = 0; j < last; ++j) {
    if (phi[j] <= 0.0 && phi[j + 1] > 0.0) {
      return grid.x[j] - phi[j] * (grid.x[j + 1] - grid.x[j]) / (phi[j + 1] - phi[j]);
    }
  }
  throw NumericalError("level set: zero crossing left the domain");
}

void advance_level_set(ShockTracker& tracker, const VelocityEstimate& v,
                       double dt, const Grid& grid) {
  // Upwind sweep for v >= 0 using the previous-step left neighbor; the ghost
  // value extends the signed-distance slope past the left boundary so a
  // linear phi stays exactly linear under the update.
  double left_old = tracker.phi[0] - grid.dx;
  for (std::size_t j = 0; j < tracker.phi.size(); ++j) {
    const double current = tracker.phi[j];
    tracker.phi[j] = current - dt * v.v_hat * (current - left_old) / grid.dx;
    left_old = current;
  }
  tracker.xi = level_set_zero_crossing(tracker.phi, grid);
}

}  // namespace gpme
