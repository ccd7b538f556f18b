/// @file exact_solution.cpp
/// @brief Implementation of the similarity-solution oracle.

#include "gpme/exact_solution.hpp"

#include <cmath>
#include <limits>

#include "gpme/errors.hpp"

namespace gpme {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

/// Residual of the flux-continuity equation in the scaled variable z.
/// For k_min = 0:  f(z) = p* erf(z) z exp(z^2) - (1 - p*)/sqrt(pi).
/// For k_min > 0 the right-hand side becomes (1 - p*) erfcx(lambda z) lambda z
/// with lambda = sqrt(k_max/k_min); the scaled complementary error function
/// keeps the evaluation finite where exp(z2^2) alone would overflow.
double flux_equation(double z, const CoefficientModel& m) {
  const double lhs = m.p_star * std::erf(z) * z * std::exp(z * z);
  double rhs;
  if (m.k_min == 0.0) {
    rhs = (1.0 - m.p_star) / kSqrtPi;
  } else {
    const double lambda = std::sqrt(m.k_max / m.k_min);
    rhs = (1.0 - m.p_star) * erfcx(lambda * z) * lambda * z;
  }
  return lhs - rhs;
}

}  // namespace

double erfcx(double x) {
  if (!(x >= 0.0)) throw ConfigError("erfcx: argument must be non-negative");
  if (x < 25.0) {
    return std::exp(x * x) * std::erfc(x);
  }
  // Asymptotic series: erfcx(x) ~ 1/(x sqrt(pi)) * sum_k (-1)^k (2k-1)!!/(2x^2)^k.
  const double inv2x2 = 1.0 / (2.0 * x * x);
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k <= 20; ++k) {
    term *= -(2.0 * k - 1.0) * inv2x2;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum / (x * kSqrtPi);
}

ExactSolution solve_front_constant(const CoefficientModel& model,
                                   double t_offset) {
  if (!(model.p_star > 0.0 && model.p_star < 1.0)) {
    throw ConfigError("p_star: must lie strictly between the boundary values 1 and 0");
  }
  if (!(model.k_max > 0.0) || model.k_min < 0.0 || model.k_min >= model.k_max) {
    throw ConfigError("coefficient model: requires k_max > k_min >= 0");
  }

  double lo = 1e-6;
  double hi = 5.0;
  double f_lo = flux_equation(lo, model);
  double f_hi = flux_equation(hi, model);
  if (!(f_lo < 0.0 && f_hi > 0.0)) {
    throw ConfigError("p_star: no bracket for the front-constant equation on [1e-6, 5]");
  }
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;  // bracket at machine resolution
    const double f_mid = flux_equation(mid, model);
    if (f_mid < 0.0) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
      f_hi = f_mid;
    }
  }

  ExactSolution sol;
  sol.model = model;
  sol.t_offset = t_offset;
  sol.z1 = 0.5 * (lo + hi);
  if (std::abs(flux_equation(sol.z1, model)) > 1e-12) {
    throw NumericalError("front-constant root solve did not reach residual 1e-12");
  }
  sol.alpha = 2.0 * std::sqrt(model.k_max) * sol.z1;
  sol.c1 = (1.0 - model.p_star) / std::erf(sol.z1);
  if (model.k_min > 0.0) {
    sol.z2 = sol.alpha / (2.0 * std::sqrt(model.k_min));
    sol.c2 = model.p_star / erfcx(sol.z2);
  }
  return sol;
}

double exact_value(double x, double t, const ExactSolution& sol) {
  const double tt = t + sol.t_offset;
  if (!(tt > 0.0)) throw ConfigError("exact_value: requires t + t_offset > 0");
  const double xs = sol.alpha * std::sqrt(tt);
  if (x == xs) return sol.model.p_star;
  if (x < xs) {
    return 1.0 - sol.c1 * std::erf(x / (2.0 * std::sqrt(sol.model.k_max * tt)));
  }
  if (sol.model.k_min == 0.0) return 0.0;
  // Right tail in overflow-safe form:
  //   p2 = p* erfcx(u) exp(z2^2 - u^2) / erfcx(z2),   u = x / (2 sqrt(k_min tt)),
  // algebraically identical to c2' erfc(u) but stable for large u.
  const double u = x / (2.0 * std::sqrt(sol.model.k_min * tt));
  return sol.model.p_star * erfcx(u) * std::exp(sol.z2 * sol.z2 - u * u) /
         erfcx(sol.z2);
}

double exact_shock_position(double t, const ExactSolution& sol) {
  const double tt = t + sol.t_offset;
  if (tt < 0.0) throw ConfigError("exact_shock_position: requires t + t_offset >= 0");
  return sol.alpha * std::sqrt(tt);
}

double exact_front_speed(double t, const ExactSolution& sol) {
  const double tt = t + sol.t_offset;
  if (!(tt > 0.0)) throw ConfigError("exact_front_speed: requires t + t_offset > 0");
  return sol.alpha / (2.0 * std::sqrt(tt));
}

}  // namespace gpme
