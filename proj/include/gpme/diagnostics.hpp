#pragma once
/// @file diagnostics.hpp
/// @brief Post-processing: error norms, convergence orders, oscillation and
///        locking metrics, and front-position error tracking.

#include <string>
#include <vector>

#include "gpme/exact_solution.hpp"
#include "gpme/solver.hpp"

namespace gpme {

/// Error norms of a profile against the reference, taken over the interior
/// nodes. l2 carries the grid weight (discrete L2, sqrt(sum e^2 dx));
/// l2_unweighted is the plain vector 2-norm of the same interior errors.
struct ErrorReport {
  double l2 = 0.0;
  double l2_unweighted = 0.0;
  double linf = 0.0;
  int n_cells = 0;
  double dx = 0.0;
  std::string scheme;
};

/// Oscillation summary of a probe time series: strict decreases beyond the
/// tolerance, the largest single-step decrease, and the number of threshold
/// crossings after the first one.
struct OscillationReport {
  long n_drops = 0;
  double max_drop = 0.0;
  long n_threshold_crossings = 0;
  bool monotone = true;
};

/// Norms over interior nodes (both end nodes excluded). Inputs must be equal
/// length and sampled at the same nodes and time.
ErrorReport error_norms(const std::vector<double>& numeric,
                        const std::vector<double>& exact, double dx);

/// Norms over interior nodes with per-node volumes (composite meshes):
/// l2 = sqrt(sum e^2 vol_j); l2_unweighted and linf as above.
ErrorReport error_norms_weighted(const std::vector<double>& numeric,
                                 const std::vector<double>& exact,
                                 const std::vector<double>& volumes);

/// Least-squares slope of log(error) against log(dx). Requires at least two
/// samples (throws ConfigError otherwise).
double convergence_order(const std::vector<double>& dxs,
                         const std::vector<double>& errors);

/// True when the sequence decreases strictly at every refinement.
bool monotone_decreasing(const std::vector<double>& errors);

/// Oscillation metrics of a probe series against the threshold p_star;
/// decreases are counted when they exceed `tol`.
OscillationReport oscillation_metrics(const std::vector<double>& series,
                                      double p_star, double tol = 1e-12);

/// Interpolated threshold crossing of a spatial profile (piecewise-linear
/// interpolant through the nodes; the crossing at the last node >= level).
double front_position(const std::vector<double>& x, const std::vector<double>& p,
                      double level);

/// Interpolated edge of the support of the profile: the zero crossing past
/// the last node with p > tol (x.back() when the profile is positive
/// throughout).
double support_front_position(const std::vector<double>& x,
                              const std::vector<double>& p, double tol = 1e-13);

/// Displacement of the interpolated threshold crossing between the initial
/// and final profiles of a run ("does the numerical interface move at all").
double locking_metric(const RunRecord& record, double p_star);

/// |xi(t) - x*(t)| / dx at every recorded sample time.
std::vector<double> shock_position_error(const RunRecord& record,
                                         const ExactSolution& oracle, double dx);

}  // namespace gpme
