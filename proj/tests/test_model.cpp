#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "gpme/errors.hpp"
#include "gpme/grid.hpp"
#include "gpme/initial_condition.hpp"
#include "gpme/model.hpp"

using namespace gpme;

TEST_CASE("step coefficient selects the branch by threshold, ties high") {
  CoefficientModel m;  // k_max = 1, k_min = 0, p_star = 0.5
  CHECK(coefficient(0.7, m) == 1.0);
  CHECK(coefficient(0.5, m) == 1.0);  // tie at the threshold takes k_max
  CHECK(coefficient(0.3, m) == 0.0);
  CHECK(coefficient(1.0, m) == 1.0);
  CHECK(coefficient(0.0, m) == 0.0);

  m.k_min = 0.25;
  CHECK(coefficient(0.3, m) == 0.25);
  CHECK(coefficient(0.5, m) == 1.0);
}

TEST_CASE("flux potential: degenerate low branch collapses to a positive part") {
  CoefficientModel m;  // k_min = 0
  CHECK(phi(0.5, m) == 0.0);
  CHECK(phi(1.0, m) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(phi(0.2, m) == 0.0);
  CHECK(phi(0.0, m) == 0.0);
}

TEST_CASE("flux potential: piecewise linear, continuous, non-decreasing") {
  CoefficientModel m;
  m.k_min = 0.1;
  m.k_max = 2.0;
  m.p_star = 0.4;

  // Slope k_min below the threshold, k_max above it.
  CHECK(phi(0.2, m) == doctest::Approx(0.1 * 0.2).epsilon(1e-15));
  CHECK(phi(0.4, m) == doctest::Approx(0.1 * 0.4).epsilon(1e-15));
  CHECK(phi(1.0, m) == doctest::Approx(0.1 * 0.4 + 2.0 * 0.6).epsilon(1e-15));

  // Continuity at the switch point: the two-sided difference over a width of
  // 2*eps is exactly the piecewise-linear increment k_min*eps + k_max*eps.
  const double eps = 1e-9;
  const double jump = phi(m.p_star + eps, m) - phi(m.p_star - eps, m);
  CHECK(jump == doctest::Approx((m.k_min + m.k_max) * eps).epsilon(1e-6));
  CHECK(std::abs(jump) < 1e-8);

  // Non-decreasing over a sweep.
  double prev = phi(0.0, m);
  for (int i = 1; i <= 200; ++i) {
    const double value = phi(i / 200.0, m);
    CHECK(value >= prev);
    prev = value;
  }
}

TEST_CASE("ramp initial condition: clipped linear profile with pinned ends") {
  ProblemSpec problem;
  problem.initial_condition = PiecewiseLinear{0.5};
  const Grid grid = make_grid(problem.domain, 10);
  const State state = build_initial_condition(problem, grid);

  REQUIRE(state.p.size() == 11);
  CHECK(state.p[0] == 1.0);
  CHECK(state.p[10] == 0.0);
  for (int j = 0; j <= 10; ++j) {
    const double expected = std::max(0.0, 1.0 - grid.x[j] / 0.5);
    CHECK(state.p[j] == doctest::Approx(expected).epsilon(1e-15));
  }
  // The tracked interface starts where the ramp meets the threshold.
  CHECK(state.xi == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(state.shock_index == 2);
  CHECK(state.t == 0.0);
}

TEST_CASE("ramp initial condition: knee must be interior") {
  ProblemSpec problem;
  problem.initial_condition = PiecewiseLinear{1.5};
  const Grid grid = make_grid(problem.domain, 10);
  CHECK_THROWS_AS(build_initial_condition(problem, grid), ConfigError);
}

TEST_CASE("tabulated initial condition: constant profile has no crossing") {
  ProblemSpec problem;
  problem.initial_condition = Custom{std::vector<double>(11, 0.7)};
  const Grid grid = make_grid(problem.domain, 10);
  CHECK_THROWS_AS(build_initial_condition(problem, grid), ConfigError);
}

TEST_CASE("tabulated initial condition: non-monotone profile is rejected") {
  ProblemSpec problem;
  std::vector<double> values = {1.0, 0.9, 0.7, 0.75, 0.4, 0.3, 0.2, 0.1, 0.05, 0.01, 0.0};
  problem.initial_condition = Custom{values};
  const Grid grid = make_grid(problem.domain, 10);
  CHECK_THROWS_AS(build_initial_condition(problem, grid), ConfigError);
}

TEST_CASE("tabulated initial condition: wrong length is rejected") {
  ProblemSpec problem;
  problem.initial_condition = Custom{std::vector<double>{1.0, 0.6, 0.4, 0.0}};
  const Grid grid = make_grid(problem.domain, 10);
  CHECK_THROWS_AS(build_initial_condition(problem, grid), ConfigError);
}

TEST_CASE("tabulated initial condition: interface is the interpolated crossing") {
  ProblemSpec problem;
  // Linear from 1 to 0 over the first eight nodes, flat zero after.
  std::vector<double> values = {1.0, 0.875, 0.75, 0.625, 0.5,
                                0.375, 0.25, 0.125, 0.0, 0.0, 0.0};
  problem.initial_condition = Custom{values};
  const Grid grid = make_grid(problem.domain, 10);
  const State state = build_initial_condition(problem, grid);
  // p = 0.5 exactly at node 4 (x = 0.4), and node 5 is below: crossing at 0.4.
  CHECK(state.xi == doctest::Approx(0.4).epsilon(1e-15));
  CHECK(state.shock_index == 4);
}

TEST_CASE("sampled initial condition: default start places the interface at 0.2") {
  ProblemSpec problem;  // default variant: sampled closed-form profile
  const Grid grid = make_grid(problem.domain, 50);
  const State state = build_initial_condition(problem, grid);

  CHECK(state.xi == doctest::Approx(0.2).epsilon(1e-13));
  CHECK(state.p[0] == 1.0);
  CHECK(state.p[50] == 0.0);
  for (int j = 1; j <= 50; ++j) CHECK(state.p[j] <= state.p[j - 1] + 1e-12);
  // Values bracket the threshold around the interface.
  CHECK(state.p[9] > 0.5);
  CHECK(state.p[11] < 0.5);
  CHECK(state.shock_index == 10);
}

TEST_CASE("sampled initial condition: explicit start time must be positive") {
  ProblemSpec problem;
  problem.initial_condition = ExactAtTime{std::optional<double>(-0.01), 0.01};
  const Grid grid = make_grid(problem.domain, 10);
  CHECK_THROWS_AS(build_initial_condition(problem, grid), ConfigError);
}

TEST_CASE("closed-form availability requires the sampled variant and unit step data") {
  ProblemSpec problem;
  CHECK(has_exact_solution(problem));
  problem.bc_left = 0.9;
  CHECK_FALSE(has_exact_solution(problem));
  problem.bc_left = 1.0;
  problem.initial_condition = PiecewiseLinear{};
  CHECK_FALSE(has_exact_solution(problem));
  CHECK_THROWS_AS(oracle_for(problem), ConfigError);
}

TEST_CASE("default start time derivation is frozen") {
  ProblemSpec problem;
  CHECK(resolve_t0(problem) ==
        doctest::Approx(0.026009312894505948).epsilon(1e-13));
  problem.initial_condition = ExactAtTime{std::optional<double>(0.0375), 0.01};
  CHECK(resolve_t0(problem) == 0.0375);
  problem.initial_condition = PiecewiseLinear{};
  CHECK_THROWS_AS(resolve_t0(problem), ConfigError);
}
