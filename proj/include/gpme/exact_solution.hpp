#pragma once
/// @file exact_solution.hpp
/// @brief Closed-form similarity solution used as the verification oracle.
///
/// For boundary data p(x_lo) = 1, p(x_hi) = 0 the model admits a similarity
/// solution whose interface travels as x*(t) = alpha * sqrt(t). The front
/// constant alpha = 2 sqrt(k_max) z1 follows from a scalar nonlinear equation
/// in z1 expressing flux continuity across the interface. Left of the front
/// the solution is an error-function profile; right of it the solution is 0
/// for k_min = 0 and a complementary-error-function tail for k_min > 0.

#include "gpme/model.hpp"

namespace gpme {

/// Immutable similarity-solution object. All evaluations are pure and
/// thread-safe. `t_offset` shifts time so that simulation time t = 0
/// corresponds to absolute time t_offset of the similarity solution.
struct ExactSolution {
  CoefficientModel model;
  double t_offset = 0.0;
  double z1 = 0.0;     ///< scaled front constant (root of the flux equation)
  double alpha = 0.0;  ///< front constant, alpha = 2 sqrt(k_max) z1
  double c1 = 0.0;     ///< left-profile amplitude, (1 - p_star)/erf(z1)
  double z2 = 0.0;     ///< scaled front constant of the right tail (k_min > 0)
  double c2 = 0.0;     ///< right-tail amplitude in scaled form, p_star/erfcx(z2)
};

/// Scaled complementary error function exp(x^2) erfc(x) for x >= 0, accurate
/// over the full range (switches to an asymptotic series for large x where
/// the direct product would overflow or lose all precision).
double erfcx(double x);

/// Solves the scalar flux-continuity equation for z1 by bracketed bisection
/// on [1e-6, 5] and assembles the solution constants. Requires normalized
/// boundary data (1, 0) and 0 < p_star < 1.
/// Throws ConfigError when no bracket exists and NumericalError when the
/// residual at the root exceeds 1e-12.
ExactSolution solve_front_constant(const CoefficientModel& model,
                                   double t_offset = 0.0);

/// Solution value p(x, t + t_offset). Exactly p_star on the interface;
/// identically zero right of it when k_min = 0. Requires t + t_offset > 0.
double exact_value(double x, double t, const ExactSolution& sol);

/// Interface position x*(t) = alpha * sqrt(t + t_offset).
double exact_shock_position(double t, const ExactSolution& sol);

/// Interface speed d/dt x*(t) = alpha / (2 sqrt(t + t_offset)).
double exact_front_speed(double t, const ExactSolution& sol);

}  // namespace gpme
