#pragma once
/// @file averaging.hpp
/// @brief Interface-coefficient averages for the two-point face flux, plus the
///        shock-cell face coefficients of the front-tracking scheme written in
///        average form. All pure functions of neighboring data.

#include <stdexcept>
#include <utility>

#include "gpme/model.hpp"

namespace gpme {

/// Plain mean of the two neighboring coefficients.
inline double arithmetic_average(double kL, double kR) {
  return 0.5 * (kL + kR);
}

/// Harmonic mean; favors the smaller coefficient and is zero whenever either
/// input vanishes (the both-zero case is defined as the limit value 0).
inline double harmonic_average(double kL, double kR) {
  const double s = kL + kR;
  if (s <= 0.0) return 0.0;
  return 2.0 * kL * kR / s;
}

/// Coefficient obtained by averaging k over the solution interval [pL, pR]:
/// (phi(pR) - phi(pL)) / (pR - pL). Equal arguments return coefficient(pL),
/// the limit of the ratio. When the arguments straddle the threshold this is
/// the jump-weighted mix of k_min and k_max.
inline double integral_average(double pL, double pR, const CoefficientModel& m) {
  if (pL == pR) return coefficient(pL, m);
  return (phi(pR, m) - phi(pL, m)) / (pR - pL);
}

/// Face coefficients that reproduce the front-tracking shock-cell fluxes when
/// inserted into the standard two-point flux with spacing dx:
///   kPlus  = k_max (dx/dx_star)        (p* - pL)/(pR - pL)
///   kMinus = k_min (dx/(dx - dx_star)) (pR - p*)/(pR - pL)
/// Requires 0 < dx_star < dx and pL != pR (callers apply the guard on
/// dx_star before calling); returns {kPlus, kMinus}.
inline std::pair<double, double> sam_face_coefficients(
    double pL, double pR, double dx, double dx_star, const CoefficientModel& m) {
  if (!(dx_star > 0.0 && dx_star < dx)) {
    throw std::invalid_argument("sam_face_coefficients: dx_star must lie in (0, dx)");
  }
  if (pL == pR) {
    throw std::invalid_argument("sam_face_coefficients: requires pL != pR");
  }
  const double jump = pR - pL;
  const double k_plus = m.k_max * (dx / dx_star) * (m.p_star - pL) / jump;
  const double k_minus = m.k_min * (dx / (dx - dx_star)) * (pR - m.p_star) / jump;
  return {k_plus, k_minus};
}

}  // namespace gpme
