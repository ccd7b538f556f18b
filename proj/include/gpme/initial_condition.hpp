#pragma once
/// @file initial_condition.hpp
/// @brief Initial-state construction for all initial-condition variants, and
///        helpers exposing the verification oracle tied to a problem.

#include "gpme/exact_solution.hpp"
#include "gpme/grid.hpp"
#include "gpme/model.hpp"

namespace gpme {

/// True when the problem admits the closed-form verification solution
/// (sampled-profile initial condition with the normalized boundary data).
bool has_exact_solution(const ProblemSpec& problem);

/// The profile time t0 of a sampled-profile initial condition. An absent t0
/// resolves to the time at which the closed-form interface sits at x = 0.2,
/// i.e. (0.2/alpha)^2. Throws ConfigError for other variants.
double resolve_t0(const ProblemSpec& problem);

/// Oracle for the problem: the closed-form solution of the *problem's* model
/// with time shifted so that simulation time 0 corresponds to the profile
/// time t0. Throws ConfigError when no oracle applies.
ExactSolution oracle_for(const ProblemSpec& problem);

/// Builds the initial state: samples the profile at the nodes, pins the end
/// nodes to the boundary values, and initializes the tracked interface xi at
/// the threshold crossing of the profile (the closed-form interface position
/// x*(t0) for the sampled variant). Tabulated data is rejected when it is not
/// monotone non-increasing or has no threshold crossing.
State build_initial_condition(const ProblemSpec& problem, const Grid& grid);

}  // namespace gpme
