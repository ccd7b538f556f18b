#pragma once
/// @file experiments.hpp
/// @brief Batch experiment driver: executes the configured (scheme, grid)
///        sweep in parallel and writes per-run CSV artifacts plus a summary
///        convergence table.

#include <string>
#include <vector>

#include "gpme/config.hpp"
#include "gpme/diagnostics.hpp"
#include "gpme/solver.hpp"

namespace gpme {

/// One executed run of a sweep plus its error report against the closed-form
/// reference (has_errors is false when the problem has none).
struct ExperimentRun {
  std::string label;  ///< scheme name; "-amr" suffix for refined-window runs
  int n_cells = 0;
  RunRecord record;
  ErrorReport errors;
  bool has_errors = false;
};

/// Executes every (scheme, grid) run of the sweep. When amr.n_inner > 0 each
/// integral run is preceded by its refined-window counterpart. Runs execute
/// in parallel and return in deterministic sweep order (schemes outer, grids
/// inner). Throws ConfigError for an invalid config, NumericalError when a
/// run fails.
std::vector<ExperimentRun> execute_runs(const ExperimentConfig& config);

/// Executes the sweep and writes all CSV artifacts into config.output_dir:
/// per run a probe series file per probe (t,p), a file per snapshot time
/// (x,p[,p_exact]), the tracked-front trajectory (t,xi), and one summary.csv
/// (scheme,N,dx,l2,linf,order,l2_unweighted,order_linf). Returns 0 on
/// success; errors are reported by exception.
int run_experiment(const ExperimentConfig& config);

}  // namespace gpme
