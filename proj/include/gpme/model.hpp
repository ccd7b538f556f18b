#pragma once
/// @file model.hpp
/// @brief Problem definition: the discontinuous step diffusivity k(p), its
///        flux potential, boundary data, and initial-condition variants.
///
/// The governing model is the nonlinear diffusion equation p_t = (k(p) p_x)_x
/// on an interval, with k(p) switching between two constants at a threshold
/// value p_star. With k_min = 0 the support of p spreads with finite speed and
/// the solution carries a moving interface (gradient discontinuity) at the
/// location where p = p_star.

#include <algorithm>
#include <optional>
#include <variant>
#include <vector>

namespace gpme {

/// Two-level step diffusivity: k(p) = k_max for p >= p_star, else k_min.
struct CoefficientModel {
  double k_max = 1.0;   ///< diffusivity on the high side (> 0)
  double k_min = 0.0;   ///< diffusivity on the low side (>= 0, < k_max)
  double p_star = 0.5;  ///< threshold value where the coefficient switches
};

/// Step diffusivity k(p). Ties at the threshold take the high value.
inline double coefficient(double p, const CoefficientModel& m) {
  return p >= m.p_star ? m.k_max : m.k_min;
}

/// Flux potential: the antiderivative of k along p, normalized so that the
/// low branch starts at zero. Piecewise linear with slope k_min below the
/// threshold and k_max above it; for k_min = 0 it reduces to the positive
/// part form k_max * max(p - p_star, 0).
inline double phi(double p, const CoefficientModel& m) {
  return m.k_min * std::min(p, m.p_star) + m.k_max * std::max(p - m.p_star, 0.0);
}

/// Initial profile sampled from the closed-form solution of the same model at
/// absolute time t0 > 0. The profile is generated with its own low-side
/// diffusivity `k_min_gen` (a small positive value keeps the sampled tail
/// smooth) while the simulation itself runs with the model's k_min.
/// `t0` empty means "derive t0 so the interface starts at x = 0.2".
struct ExactAtTime {
  std::optional<double> t0;
  double k_min_gen = 0.01;
};

/// Initial ramp p0(x) = max(0, bc_left * (1 - x / x_knee)): linear decay from
/// the left boundary value down to zero at the knee, zero beyond it.
struct PiecewiseLinear {
  double x_knee = 0.5;
};

/// Tabulated node values (one per grid node). Must be monotone non-increasing
/// and must cross the threshold, otherwise construction is rejected.
struct Custom {
  std::vector<double> values;
};

using InitialConditionSpec = std::variant<ExactAtTime, PiecewiseLinear, Custom>;

/// Closed interval [lo, hi] describing the spatial domain.
struct Interval {
  double lo = 0.0;
  double hi = 1.0;
};

/// Full problem statement: model constants, domain, Dirichlet boundary data,
/// initial condition, and final time. The monotone setting assumed throughout
/// requires bc_left >= p_star >= bc_right.
struct ProblemSpec {
  CoefficientModel model;
  Interval domain;
  double bc_left = 1.0;
  double bc_right = 0.0;
  InitialConditionSpec initial_condition = ExactAtTime{};
  double t_end = 0.05;
};

}  // namespace gpme
