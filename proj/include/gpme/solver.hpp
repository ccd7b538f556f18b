#pragma once
/// @file solver.hpp
/// @brief Explicit finite-volume stepping: forward-Euler updates with
///        average-based face coefficients, the front-tracking scheme on the
///        auxiliary shock-cell geometry, full-run drivers, and the
///        moving-window refinement variant.

#include <string>
#include <vector>

#include "gpme/grid.hpp"
#include "gpme/model.hpp"
#include "gpme/shock_tracker.hpp"

namespace gpme {

/// Interface scheme selection. The first three apply an averaged face
/// coefficient uniformly at every face; the Sam* kinds track the interface
/// explicitly and use one-sided fluxes against the threshold value inside the
/// shock cell, differing only in how the interface position is advanced.
enum class SchemeKind { Arithmetic, Harmonic, Integral, SamExact, SamJump, SamLevelSet };

inline bool is_sam(SchemeKind k) {
  return k == SchemeKind::SamExact || k == SchemeKind::SamJump ||
         k == SchemeKind::SamLevelSet;
}

std::string scheme_name(SchemeKind kind);
SchemeKind parse_scheme_kind(const std::string& name);  // throws ConfigError

/// Scheme parameters.
///
/// eps_factor: front-cell guard. The one-sided shock-cell gradients are
/// evaluated over a spacing clamped from below at eps_factor * dx (scaled by
/// k_min/k_max on the low side), which keeps the explicit update at the
/// front-adjacent node monotone as the interface approaches a grid node.
/// With dt = dt_factor dx^2 the no-overshoot condition is
///   eps_factor >= 2 dt_factor k_max / (1 - 2 dt_factor k_max),
/// i.e. >= 1/15 at the defaults; the default 0.1 holds a margin above it.
struct SchemeSpec {
  SchemeKind kind = SchemeKind::SamJump;
  double eps_factor = 0.1;
  double dt_factor = 1.0 / 32.0;
  RightStencil p_right_stencil = RightStencil::Zero;
};

/// Minimum eps_factor for which the clamped front-cell update cannot
/// overshoot the threshold (see SchemeSpec).
double monotone_engagement_bound(double dt_factor, double k_max);

/// Geometry of the auxiliary control volumes around the tracked interface:
/// the shock cell [x_i, x_{i+1}] is split by xi into resized volumes for
/// nodes i and i+1 plus a threshold-valued sliver CV_* of width exactly dx/2
/// between face_left and face_right.
struct AuxiliaryGeometry {
  double dx_star = 0.0;     ///< xi - x_i
  double vol_i = 0.0;       ///< (dx + dx_star)/2
  double vol_ip1 = 0.0;     ///< dx - dx_star/2
  double face_left = 0.0;   ///< x_i + dx_star/2
  double face_right = 0.0;  ///< xi + (dx - dx_star)/2
};

AuxiliaryGeometry make_auxiliary_geometry(double dx, double x_i, double xi);

/// Largest index i with p_i >= p_star (the shock cell is [x_i, x_{i+1}]).
/// Requires a monotone non-increasing profile that actually crosses the
/// threshold; throws NumericalError otherwise.
int locate_shock_cell(const std::vector<double>& p, double p_star);

/// Largest positive jump p_{j+1} - p_j in the profile (0 when monotone
/// non-increasing). Violations beyond 1e-12 abort a run.
double max_monotonicity_violation(const std::vector<double>& p);

/// Sampling plan for a run: fixed probe locations (nearest node on uniform
/// grids, interpolated on composite meshes) recorded every step, and spatial
/// snapshots captured at the steps nearest the requested times.
struct ProbeSpec {
  std::vector<double> positions;
  std::vector<double> snapshot_times;
};

/// Spatial profile captured at one time; p_exact is present only when the
/// problem has a closed-form solution.
struct Snapshot {
  double t = 0.0;
  std::vector<double> x, p, p_exact;
};

struct RunMetadata {
  std::string scheme;
  int n_cells = 0;
  double x_lo = 0.0;  ///< left end of the domain (node 0 coordinate)
  double dx = 0.0;
  double dt = 0.0;
  double eps_factor = 0.0;
  double dt_factor = 0.0;
  int amr_n_inner = 0;  ///< 0 for plain runs
};

/// Everything recorded over one run. All series share `times` (strictly
/// increasing, starting at t = 0 with the initial condition included).
struct RunRecord {
  RunMetadata metadata;
  std::vector<double> times;
  std::vector<double> probe_positions;             ///< actual sampled locations
  std::vector<std::vector<double>> probe_series;   ///< [probe][sample]
  std::vector<double> xi_series;                   ///< tracked front per sample
  std::vector<Snapshot> snapshots;
  State initial_state;
  State final_state;
  /// Largest per-step defect of the discrete conservation identity,
  /// normalized by max(1, |mass change|, |flux balance|).
  double max_conservation_residual = 0.0;
  /// Moving-window runs: times at which the refined window moved, plus the
  /// composite node positions/volumes of the final profile.
  std::vector<double> window_move_times;
  std::vector<double> final_positions;
  std::vector<double> final_volumes;
};

/// One forward-Euler step with an averaged face coefficient applied uniformly
/// at every face (Arithmetic/Harmonic/Integral kinds). Boundary nodes are
/// unchanged; time advances by dt = dt_factor dx^2. Aborts on NaN/Inf.
State ftcs_step(const State& state, const Grid& grid, const SchemeSpec& scheme,
                const CoefficientModel& model);

/// One forward-Euler step of the front-tracking scheme (Sam* kinds): standard
/// two-point fluxes with the piecewise-constant coefficient away from the
/// shock cell, one-sided fluxes against the threshold value on the auxiliary
/// geometry inside it, then the tracker advances xi and the shock index is
/// re-derived from the new xi. Nodes swept by the interface are raised to at
/// least the threshold value so the bracketing p_i >= p* >= p_{i+1} survives
/// rollover. Aborts on NaN/Inf and on a front receding by more than the
/// guard spacing.
State sam_step(const State& state, const Grid& grid, const SchemeSpec& scheme,
               const CoefficientModel& model, ShockTracker& tracker);

/// Drives stepping from the built initial condition to t_end, recording probe
/// series, snapshots, the front trajectory, and the conservation audit.
/// Errors from stepping propagate with the failing step index.
RunRecord run(const ProblemSpec& problem, const Grid& grid,
              const SchemeSpec& scheme, const ProbeSpec& probes);

/// Forward-Euler run on a composite mesh in which the two coarse cells
/// bracketing the interface are subdivided into n_inner subcells each; the
/// refined window travels with the interface (outgoing fine values are
/// restricted conservatively to the coarse nodes, incoming fine values are
/// linearly interpolated). Only the integral-average scheme is supported and
/// dt respects the fine spacing: dt = dt_factor (dx/n_inner)^2.
RunRecord run_with_amr(const ProblemSpec& problem, const Grid& coarse_grid,
                       int n_inner, const SchemeSpec& scheme,
                       const ProbeSpec& probes);

}  // namespace gpme
