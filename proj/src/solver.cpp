/// @file solver.cpp
/// @brief Finite-volume stepping and run drivers.

#include "gpme/solver.hpp"

#include <algorithm>
#include <cmath>

#include "gpme/averaging.hpp"
#include "gpme/diagnostics.hpp"
#include "gpme/errors.hpp"
#include "gpme/initial_condition.hpp"

namespace gpme {

std::string scheme_name(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::Arithmetic: return "arithmetic";
    case SchemeKind::Harmonic: return "harmonic";
    case SchemeKind::Integral: return "integral";
    case SchemeKind::SamExact: return "sam-exact";
    case SchemeKind::SamJump: return "sam-jump";
    case SchemeKind::SamLevelSet: return "sam-levelset";
  }
  return "unknown";
}

SchemeKind parse_scheme_kind(const std::string& name) {
  if (name == "arithmetic") return SchemeKind::Arithmetic;
  if (name == "harmonic") return SchemeKind::Harmonic;
  if (name == "integral") return SchemeKind::Integral;
  if (name == "sam-exact") return SchemeKind::SamExact;
  if (name == "sam-jump") return SchemeKind::SamJump;
  if (name == "sam-levelset") return SchemeKind::SamLevelSet;
  throw ConfigError("schemes: unknown scheme name '" + name + "'");
}

double monotone_engagement_bound(double dt_factor, double k_max) {
  const double a = 2.0 * dt_factor * k_max;
  if (a >= 1.0) return std::numeric_limits<double>::infinity();
  return a / (1.0 - a);
}

AuxiliaryGeometry make_auxiliary_geometry(double dx, double x_i, double xi) {
  AuxiliaryGeometry g;
  g.dx_star = xi - x_i;
  g.vol_i = 0.5 * (dx + g.dx_star);
  g.vol_ip1 = dx - 0.5 * g.dx_star;
  g.face_left = x_i + 0.5 * g.dx_star;
  g.face_right = xi + 0.5 * (dx - g.dx_star);
  return g;
}

int locate_shock_cell(const std::vector<double>& p, double p_star) {
  int i = -1;
  const int last = static_cast<int>(p.size()) - 1;
  for (int j = 0; j <= last; ++j) {
    if (p[j] >= p_star) i = j;
  }
  if (i < 0 || i >= last) {
    throw NumericalError("locate_shock_cell: no threshold crossing in the profile");
  }
  return i;
}

double max_monotonicity_violation(const std::vector<double>& p) {
  double worst = 0.0;
  for (std::size_t j = 0; j + 1 < p.size(); ++j) {
    worst = std::max(worst, p[j + 1] - p[j]);
  }
  return worst;
}

namespace {

/// Per-step bookkeeping for the discrete conservation audit: the change of
/// interior mass must equal dt times the net flux into the interior (minus
/// what the threshold-valued sliver absorbs, for the front-tracking scheme).
struct StepAudit {
  double mass_delta = 0.0;
  double flux_rhs = 0.0;
  double residual() const {
    const double scale = std::max({1.0, std::abs(mass_delta), std::abs(flux_rhs)});
    return std::abs(mass_delta - flux_rhs) / scale;
  }
};

void check_finite(const std::vector<double>& p, long step) {
  for (double v : p) {
    if (!std::isfinite(v)) {
      throw NumericalError("solution became non-finite (instability)", step);
    }
  }
}

int index_from_xi(double xi, const Grid& grid) {
  return static_cast<int>(std::floor((xi - grid.domain.lo) / grid.dx + 1e-12));
}

/// Face diffusivity for the average-based schemes.
double face_coefficient(SchemeKind kind, double pL, double pR,
                        const CoefficientModel& model) {
  switch (kind) {
    case SchemeKind::Arithmetic:
      return arithmetic_average(coefficient(pL, model), coefficient(pR, model));
    case SchemeKind::Harmonic:
      return harmonic_average(coefficient(pL, model), coefficient(pR, model));
    case SchemeKind::Integral:
      return integral_average(pL, pR, model);
    default:
      throw NumericalError("ftcs_step: scheme is not average-based");
  }
}

StepAudit ftcs_step_inplace(State& state, const Grid& grid,
                            const SchemeSpec& scheme, const CoefficientModel& model,
                            std::vector<double>& flux, long step) {
  const int n = grid.n_cells;
  const double dx = grid.dx;
  const double dt = scheme.dt_factor * dx * dx;
  auto& p = state.p;

  flux.resize(n);
  for (int j = 0; j < n; ++j) {
    const double k = face_coefficient(scheme.kind, p[j], p[j + 1], model);
    flux[j] = -k * (p[j + 1] - p[j]) / dx;
  }

  StepAudit audit;
  for (int j = 1; j < n; ++j) {
    const double dp = (dt / dx) * (flux[j - 1] - flux[j]);
    p[j] += dp;
    audit.mass_delta += dx * dp;
  }
  audit.flux_rhs = dt * (flux[0] - flux[n - 1]);
  check_finite(p, step);
  state.t += dt;
  return audit;
}

StepAudit sam_step_inplace(State& state, const Grid& grid,
                           const SchemeSpec& scheme, const CoefficientModel& model,
                           ShockTracker& tracker, std::vector<double>& flux,
                           long step) {
  const int n = grid.n_cells;
  const double dx = grid.dx;
  const double dt = scheme.dt_factor * dx * dx;
  const double p_star = model.p_star;
  auto& p = state.p;

  const int i = std::clamp(index_from_xi(state.xi, grid), 0, n - 1);
  if (i < 1) {
    throw NumericalError("front too close to the left boundary", step);
  }
  const AuxiliaryGeometry aux = make_auxiliary_geometry(dx, grid.x[i], state.xi);

  // Standard two-point fluxes away from the shock cell: every face left of it
  // joins nodes at or above the threshold (k_max side), every face right of
  // it joins nodes below (k_min side). The face inside the shock cell is
  // replaced by the pair of one-sided fluxes against the threshold value.
  flux.assign(n, 0.0);
  for (int j = 0; j < i; ++j) flux[j] = -model.k_max * (p[j + 1] - p[j]) / dx;
  for (int j = i + 1; j < n; ++j) flux[j] = -model.k_min * (p[j + 1] - p[j]) / dx;

  // One-sided gradients over clamped spacings (front-cell guard; see
  // SchemeSpec). The low-side clamp scales with k_min/k_max because the
  // explicit-update footprint of that flux scales with the coefficient.
  const double eps = scheme.eps_factor * dx;
  const double flux_plus = -model.k_max * (p_star - p[i]) / std::max(aux.dx_star, eps);
  double flux_minus = 0.0;
  if (model.k_min > 0.0) {
    const double eps_minus = eps * (model.k_min / model.k_max);
    flux_minus = -model.k_min * (p[i + 1] - p_star) /
                 std::max(dx - aux.dx_star, eps_minus);
  }

  // Front speed from the pre-update profile. The two-cells-right stencil is
  // meaningful only while the right state is resolvable; otherwise fall back
  // to the zero-right-state form.
  VelocityEstimate v{};
  if (tracker.kind != ShockTracker::Kind::Exact) {
    RightStencil stencil = scheme.p_right_stencil;
    if (stencil == RightStencil::TwoCellsRight &&
        (i + 3 > n || p[i + 2] <= 1e-10)) {
      stencil = RightStencil::Zero;
    }
    v = jump_velocity(p, i, dx, model, stencil);
  }

  StepAudit audit;
  for (int j = 1; j < i; ++j) {
    const double dp = (dt / dx) * (flux[j - 1] - flux[j]);
    p[j] += dp;
    audit.mass_delta += dx * dp;
  }
  {
    const double dp = dt * (flux[i - 1] - flux_plus) / aux.vol_i;
    p[i] += dp;
    audit.mass_delta += aux.vol_i * dp;
  }
  audit.flux_rhs = dt * (flux[0] - flux_plus);
  if (i + 1 <= n - 1) {
    const double dp = dt * (flux_minus - flux[i + 1]) / aux.vol_ip1;
    p[i + 1] += dp;
    audit.mass_delta += aux.vol_ip1 * dp;
    for (int j = i + 2; j < n; ++j) {
      const double dpj = (dt / dx) * (flux[j - 1] - flux[j]);
      p[j] += dpj;
      audit.mass_delta += dx * dpj;
    }
    audit.flux_rhs += dt * (flux_minus - flux[n - 1]);
  }
  check_finite(p, step);

  // Advance the tracker from the already-estimated speed.
  const double xi_old = state.xi;
  switch (tracker.kind) {
    case ShockTracker::Kind::Exact:
      tracker.xi = exact_shock_position(state.t + dt, tracker.oracle);
      break;
    case ShockTracker::Kind::JumpOde:
      advance_jump_ode(tracker, v, dt);
      break;
    case ShockTracker::Kind::LevelSet:
      advance_level_set(tracker, v, dt, grid);
      break;
  }
  const double xi_new = tracker.xi;
  if (xi_new < xi_old - eps) {
    throw NumericalError("front receded beyond the guard spacing", step);
  }
  if (xi_new >= grid.domain.hi) {
    throw NumericalError("front reached the right boundary", step);
  }

  // Rollover: nodes the interface swept past join the high side; raising them
  // to the threshold value preserves the shock-cell bracketing. (This
  // reinitialization happens between steps and is deliberately outside the
  // per-step flux audit, like the window moves of the refined-mesh variant.)
  const int i_new = std::clamp(index_from_xi(xi_new, grid), 1, n - 1);
  for (int m = i + 1; m <= i_new && m <= n - 1; ++m) {
    p[m] = std::max(p[m], p_star);
  }
  state.xi = xi_new;
  state.shock_index = i_new;
  state.t += dt;
  return audit;
}

}  // namespace

State ftcs_step(const State& state, const Grid& grid, const SchemeSpec& scheme,
                const CoefficientModel& model) {
  if (is_sam(scheme.kind)) {
    throw ConfigError("ftcs_step: requires an average-based scheme kind");
  }
  State next = state;
  std::vector<double> flux;
  ftcs_step_inplace(next, grid, scheme, model, flux, -1);
  return next;
}

State sam_step(const State& state, const Grid& grid, const SchemeSpec& scheme,
               const CoefficientModel& model, ShockTracker& tracker) {
  if (!is_sam(scheme.kind)) {
    throw ConfigError("sam_step: requires a front-tracking scheme kind");
  }
  State next = state;
  std::vector<double> flux;
  sam_step_inplace(next, grid, scheme, model, tracker, flux, -1);
  return next;
}

RunRecord run(const ProblemSpec& problem, const Grid& grid,
              const SchemeSpec& scheme, const ProbeSpec& probes) {
  const int n = grid.n_cells;
  const double dx = grid.dx;
  const double dt = scheme.dt_factor * dx * dx;
  const long nsteps = std::lround(problem.t_end / dt);

  State state = build_initial_condition(problem, grid);

  ShockTracker tracker;
  if (is_sam(scheme.kind)) {
    // Structural seed: every node at or left of the tracked interface belongs
    // to the high side, so it must carry at least the threshold value.
    for (int m = 1; m <= state.shock_index && m <= n - 1; ++m) {
      state.p[m] = std::max(state.p[m], problem.model.p_star);
    }
    switch (scheme.kind) {
      case SchemeKind::SamExact:
        tracker = make_exact_tracker(oracle_for(problem));
        break;
      case SchemeKind::SamJump:
        tracker = make_jump_tracker(state.xi);
        break;
      default:
        tracker = make_level_set_tracker(state.xi, grid);
        break;
    }
  } else {
    state.shock_index = locate_shock_cell(state.p, problem.model.p_star);
    state.xi = front_position(grid.x, state.p, problem.model.p_star);
  }

  RunRecord rec;
  rec.metadata.scheme = scheme_name(scheme.kind);
  rec.metadata.n_cells = n;
  rec.metadata.x_lo = grid.x.front();
  rec.metadata.dx = dx;
  rec.metadata.dt = dt;
  rec.metadata.eps_factor = scheme.eps_factor;
  rec.metadata.dt_factor = scheme.dt_factor;
  rec.initial_state = state;

  std::vector<int> probe_nodes;
  for (double px : probes.positions) {
    const int jp = nearest_node(grid, px);
    probe_nodes.push_back(jp);
    rec.probe_positions.push_back(grid.x[jp]);
  }
  rec.probe_series.resize(probe_nodes.size());

  std::vector<long> snapshot_steps;
  for (double ts : probes.snapshot_times) snapshot_steps.push_back(std::lround(ts / dt));

  const bool with_oracle = has_exact_solution(problem);
  ExactSolution oracle;
  if (with_oracle) oracle = oracle_for(problem);

  auto record_sample = [&]() {
    rec.times.push_back(state.t);
    for (std::size_t q = 0; q < probe_nodes.size(); ++q) {
      rec.probe_series[q].push_back(state.p[probe_nodes[q]]);
    }
    rec.xi_series.push_back(state.xi);
  };
  auto capture_snapshots = [&](long step_index) {
    for (std::size_t q = 0; q < snapshot_steps.size(); ++q) {
      if (snapshot_steps[q] != step_index) continue;
      Snapshot snap;
      snap.t = state.t;
      snap.x = grid.x;
      snap.p = state.p;
      if (with_oracle && state.t + oracle.t_offset > 0.0) {
        snap.p_exact.resize(snap.x.size());
        for (std::size_t j = 0; j < snap.x.size(); ++j) {
          snap.p_exact[j] = exact_value(snap.x[j], state.t, oracle);
        }
      }
      rec.snapshots.push_back(std::move(snap));
    }
  };

  record_sample();
  capture_snapshots(0);

  std::vector<double> flux;
  for (long nstep = 0; nstep < nsteps; ++nstep) {
    const StepAudit audit =
        is_sam(scheme.kind)
            ? sam_step_inplace(state, grid, scheme, problem.model, tracker, flux, nstep)
            : ftcs_step_inplace(state, grid, scheme, problem.model, flux, nstep);
    rec.max_conservation_residual =
        std::max(rec.max_conservation_residual, audit.residual());

    const double violation = max_monotonicity_violation(state.p);
    if (violation > 1e-12) {
      throw NumericalError(
          "profile lost monotonicity (violation " + std::to_string(violation) + ")",
          nstep);
    }
    if (!is_sam(scheme.kind)) {
      state.shock_index = locate_shock_cell(state.p, problem.model.p_star);
      state.xi = front_position(grid.x, state.p, problem.model.p_star);
    }
    record_sample();
    capture_snapshots(nstep + 1);
  }

  rec.final_state = state;
  return rec;
}

}  // namespace gpme
