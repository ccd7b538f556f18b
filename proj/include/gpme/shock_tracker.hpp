#pragma once
/// @file shock_tracker.hpp
/// @brief Interface-position tracking: closed-form trajectory, jump-condition
///        ODE integration, and a 1D level-set formulation.

#include <vector>

#include "gpme/exact_solution.hpp"
#include "gpme/grid.hpp"
#include "gpme/model.hpp"

namespace gpme {

/// Choice of the right-state approximation in the discrete jump condition.
enum class RightStencil {
  Zero,           ///< right state taken as 0 (compact-support tail)
  TwoCellsRight,  ///< right state approximated by the node two cells right
};

/// Front-speed estimate produced by the discrete jump condition.
/// Non-negative for this (non-receding) problem class.
struct VelocityEstimate {
  double v_hat = 0.0;
};

/// Interface tracker. `Exact` follows the closed-form trajectory; `JumpOde`
/// integrates xi' = v_hat with Forward Euler; `LevelSet` advects a signed
/// distance function (negative left of the front) with first-order upwinding
/// and recovers xi as its interpolated zero crossing.
struct ShockTracker {
  enum class Kind { Exact, JumpOde, LevelSet };
  Kind kind = Kind::JumpOde;
  double xi = 0.0;
  std::vector<double> phi;  ///< signed distance on grid nodes (LevelSet only)
  ExactSolution oracle;     ///< closed-form trajectory (Exact only)
};

ShockTracker make_exact_tracker(const ExactSolution& oracle);
ShockTracker make_jump_tracker(double xi0);
ShockTracker make_level_set_tracker(double xi0, const Grid& grid);

/// Discrete jump-condition speed at shock cell i (0-based, p_i >= p* > p_{i+1}).
///
/// Zero stencil:   v = k_max (p_{i-1} - p_i) / (dx p_i)
///   (one-sided flux behind the front divided by the solution jump p_i - 0;
///   the k_max factor makes the estimate dimensionally a speed for any model).
/// TwoCellsRight:  v = (F_L - F_R)/(p_i - p_{i+2}) with one-sided fluxes
///   F_L = -k_max (p_i - p_{i-1})/dx and F_R = -k_min (p_{i+3} - p_{i+2})/dx.
///
/// Throws NumericalError for out-of-range stencils, a non-positive p_i (Zero),
/// or a degenerate jump |p_i - p_{i+2}| < 1e-14 (TwoCellsRight).
VelocityEstimate jump_velocity(const std::vector<double>& p, int i, double dx,
                               const CoefficientModel& model, RightStencil stencil);

/// Forward Euler update xi <- xi + dt v_hat.
void advance_jump_ode(ShockTracker& tracker, const VelocityEstimate& v, double dt);

/// First-order upwind advection of the level-set function with the speed
/// extended as a constant over the domain, then recovery of xi from the zero
/// crossing. Throws NumericalError when the zero crossing leaves the domain.
void advance_level_set(ShockTracker& tracker, const VelocityEstimate& v,
                       double dt, const Grid& grid);

/// Interpolated zero crossing of the level-set function (phi <= 0 left of it).
double level_set_zero_crossing(const std::vector<double>& phi, const Grid& grid);

}  // namespace gpme
