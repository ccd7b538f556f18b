/// @file initial_condition.cpp
/// @brief Initial-state construction.

#include "gpme/initial_condition.hpp"

#include <algorithm>
#include <cmath>

#include "gpme/errors.hpp"

namespace gpme {

namespace {

/// Interpolated crossing of a monotone non-increasing profile with `level`:
/// position where the piecewise-linear interpolant equals level, taken at the
/// last node with p >= level.
double profile_level_crossing(const std::vector<double>& x,
                              const std::vector<double>& p, double level) {
  int j = -1;
  for (int k = 0; k < static_cast<int>(p.size()); ++k) {
    if (p[k] >= level) j = k;
  }
  if (j < 0 || j + 1 >= static_cast<int>(p.size())) {
    throw ConfigError("ic.values: no threshold crossing in the profile");
  }
  if (p[j] == p[j + 1]) return x[j];
  return x[j] + (p[j] - level) / (p[j] - p[j + 1]) * (x[j + 1] - x[j]);
}

}  // namespace

bool has_exact_solution(const ProblemSpec& problem) {
  return std::holds_alternative<ExactAtTime>(problem.initial_condition) &&
         problem.bc_left == 1.0 && problem.bc_right == 0.0;
}

double resolve_t0(const ProblemSpec& problem) {
  const auto* ic = std::get_if<ExactAtTime>(&problem.initial_condition);
  if (ic == nullptr) {
    throw ConfigError("ic.variant: profile time t0 only applies to the sampled variant");
  }
  if (ic->t0.has_value()) return *ic->t0;
  const ExactSolution sol = solve_front_constant(problem.model);
  return (0.2 / sol.alpha) * (0.2 / sol.alpha);
}

ExactSolution oracle_for(const ProblemSpec& problem) {
  if (!has_exact_solution(problem)) {
    throw ConfigError(
        "ic.variant: no closed-form solution for this problem "
        "(requires the sampled initial condition and boundary values 1, 0)");
  }
  return solve_front_constant(problem.model, resolve_t0(problem));
}

State build_initial_condition(const ProblemSpec& problem, const Grid& grid) {
  const int n = grid.n_cells;
  State state;
  state.t = 0.0;
  state.p.resize(n + 1);

  if (const auto* ic = std::get_if<ExactAtTime>(&problem.initial_condition)) {
    const double t0 = resolve_t0(problem);
    if (!(t0 > 0.0)) throw ConfigError("ic.t0: must be > 0");
    // Sample a slightly smoothed profile (its own low-side diffusivity
    // k_min_gen), but seed the tracked interface from the problem's own
    // closed-form trajectory so the tracker starts on its exact path.
    CoefficientModel gen_model = problem.model;
    gen_model.k_min = ic->k_min_gen;
    const ExactSolution generator = solve_front_constant(gen_model, t0);
    for (int j = 0; j <= n; ++j) state.p[j] = exact_value(grid.x[j], 0.0, generator);
    const ExactSolution oracle = solve_front_constant(problem.model, t0);
    state.xi = exact_shock_position(0.0, oracle);
  } else if (const auto* pl = std::get_if<PiecewiseLinear>(&problem.initial_condition)) {
    if (!(pl->x_knee > grid.domain.lo && pl->x_knee < grid.domain.hi)) {
      throw ConfigError("ic.x_knee: must lie strictly inside the domain");
    }
    for (int j = 0; j <= n; ++j) {
      state.p[j] = std::max(0.0, problem.bc_left * (1.0 - grid.x[j] / pl->x_knee));
    }
    // The tracked interface is the threshold crossing of the ramp. (The
    // support edge of the profile sits farther right, at the knee; the
    // tracker follows the threshold level, which is what the shock-cell
    // bracketing p_i >= p_star >= p_{i+1} requires.)
    state.xi = pl->x_knee * (1.0 - problem.model.p_star / problem.bc_left);
  } else {
    const auto& custom = std::get<Custom>(problem.initial_condition);
    if (static_cast<int>(custom.values.size()) != n + 1) {
      throw ConfigError("ic.values: needs exactly one value per grid node");
    }
    for (int j = 0; j < n; ++j) {
      if (custom.values[j + 1] > custom.values[j]) {
        throw ConfigError("ic.values: must be monotone non-increasing");
      }
    }
    state.p = custom.values;
    state.xi = profile_level_crossing(grid.x, state.p, problem.model.p_star);
  }

  state.p[0] = problem.bc_left;
  state.p[n] = problem.bc_right;
  for (int j = 1; j <= n; ++j) {
    if (state.p[j] > state.p[j - 1] + 1e-12) {
      throw ConfigError("initial condition: sampled profile is not monotone non-increasing");
    }
  }
  state.shock_index = static_cast<int>(
      std::floor((state.xi - grid.domain.lo) / grid.dx + 1e-12));
  state.shock_index = std::clamp(state.shock_index, 0, n - 1);
  return state;
}

}  // namespace gpme
