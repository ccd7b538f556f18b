/// @file diagnostics.cpp
/// @brief Post-processing metrics.

#include "gpme/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "gpme/errors.hpp"

namespace gpme {

ErrorReport error_norms(const std::vector<double>& numeric,
                        const std::vector<double>& exact, double dx) {
  if (numeric.size() != exact.size()) {
    throw ConfigError("error_norms: length mismatch between profiles");
  }
  ErrorReport r;
  r.dx = dx;
  r.n_cells = static_cast<int>(numeric.size()) - 1;
  double sum_sq = 0.0;
  for (std::size_t j = 1; j + 1 < numeric.size(); ++j) {
    const double e = numeric[j] - exact[j];
    sum_sq += e * e;
    r.linf = std::max(r.linf, std::abs(e));
  }
  r.l2 = std::sqrt(sum_sq * dx);
  r.l2_unweighted = std::sqrt(sum_sq);
  return r;
}

ErrorReport error_norms_weighted(const std::vector<double>& numeric,
                                 const std::vector<double>& exact,
                                 const std::vector<double>& volumes) {
  if (numeric.size() != exact.size() || numeric.size() != volumes.size()) {
    throw ConfigError("error_norms: length mismatch between profiles");
  }
  ErrorReport r;
  r.n_cells = static_cast<int>(numeric.size()) - 1;
  double sum_sq = 0.0;
  double sum_sq_w = 0.0;
  for (std::size_t j = 1; j + 1 < numeric.size(); ++j) {
    const double e = numeric[j] - exact[j];
    sum_sq += e * e;
    sum_sq_w += e * e * volumes[j];
    r.linf = std::max(r.linf, std::abs(e));
  }
  r.l2 = std::sqrt(sum_sq_w);
  r.l2_unweighted = std::sqrt(sum_sq);
  return r;
}

double convergence_order(const std::vector<double>& dxs,
                         const std::vector<double>& errors) {
  if (dxs.size() != errors.size() || dxs.size() < 2) {
    throw ConfigError("convergence_order: needs at least two (dx, error) samples");
  }
  const std::size_t n = dxs.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    mx += std::log(dxs[k]);
    my += std::log(errors[k]);
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double ax = std::log(dxs[k]) - mx;
    sxy += ax * (std::log(errors[k]) - my);
    sxx += ax * ax;
  }
  return sxy / sxx;
}

bool monotone_decreasing(const std::vector<double>& errors) {
  for (std::size_t k = 0; k + 1 < errors.size(); ++k) {
    if (!(errors[k + 1] < errors[k])) return false;
  }
  return true;
}

OscillationReport oscillation_metrics(const std::vector<double>& series,
                                      double p_star, double tol) {
  OscillationReport r;
  long transitions = 0;
  for (std::size_t k = 0; k + 1 < series.size(); ++k) {
    const double step = series[k + 1] - series[k];
    if (step < -tol) {
      ++r.n_drops;
      r.max_drop = std::max(r.max_drop, -step);
    }
    if ((series[k] >= p_star) != (series[k + 1] >= p_star)) ++transitions;
  }
  r.n_threshold_crossings = std::max<long>(0, transitions - 1);
  r.monotone = (r.n_drops == 0);
  return r;
}

double front_position(const std::vector<double>& x, const std::vector<double>& p,
                      double level) {
  int i = -1;
  for (int j = 0; j < static_cast<int>(p.size()); ++j) {
    if (p[j] >= level) i = j;
  }
  if (i < 0) throw NumericalError("front_position: profile entirely below the level");
  if (i + 1 >= static_cast<int>(p.size())) return x.back();
  if (p[i] == p[i + 1]) return x[i];
  return x[i] + (p[i] - level) / (p[i] - p[i + 1]) * (x[i + 1] - x[i]);
}

double support_front_position(const std::vector<double>& x,
                              const std::vector<double>& p, double tol) {
  int i = -1;
  for (int j = 0; j < static_cast<int>(p.size()); ++j) {
    if (p[j] > tol) i = j;
  }
  if (i < 0) throw NumericalError("support_front_position: profile has empty support");
  if (i + 1 >= static_cast<int>(p.size())) return x.back();
  return x[i] + (p[i] - tol) / (p[i] - p[i + 1]) * (x[i + 1] - x[i]);
}

double locking_metric(const RunRecord& record, double p_star) {
  if (record.initial_state.p.empty() || record.final_state.p.empty()) return 0.0;
  auto uniform_coords = [&](std::size_t count) {
    std::vector<double> c(count);
    for (std::size_t j = 0; j < count; ++j) {
      c[j] = record.metadata.x_lo + record.metadata.dx * static_cast<double>(j);
    }
    return c;
  };
  const std::vector<double> x0 = uniform_coords(record.initial_state.p.size());
  const std::vector<double> x1 = record.final_positions.empty()
                                     ? uniform_coords(record.final_state.p.size())
                                     : record.final_positions;
  return std::abs(front_position(x1, record.final_state.p, p_star) -
                  front_position(x0, record.initial_state.p, p_star));
}

std::vector<double> shock_position_error(const RunRecord& record,
                                         const ExactSolution& oracle, double dx) {
  std::vector<double> err;
  err.reserve(record.times.size());
  for (std::size_t k = 0; k < record.times.size(); ++k) {
    const double xs = exact_shock_position(record.times[k], oracle);
    err.push_back(std::abs(record.xi_series[k] - xs) / dx);
  }
  return err;
}

}  // namespace gpme
