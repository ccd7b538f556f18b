#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "gpme/errors.hpp"
#include "gpme/grid.hpp"
#include "gpme/initial_condition.hpp"
#include "gpme/model.hpp"
#include "gpme/solver.hpp"

using namespace gpme;

namespace {

State make_state(std::vector<double> p) {
  State s;
  s.p = std::move(p);
  s.t = 0.0;
  return s;
}

}  // namespace

TEST_CASE("shock cell location: largest index at or above the threshold") {
  CHECK(locate_shock_cell({1.0, 0.8, 0.6, 0.2, 0.0}, 0.5) == 2);
  // Tie at the threshold counts as the left (high) side.
  CHECK(locate_shock_cell({1.0, 0.5, 0.4, 0.0}, 0.5) == 1);
  // No crossing: everything above, or everything below.
  CHECK_THROWS_AS(locate_shock_cell({1.0, 0.9, 0.8}, 0.5), NumericalError);
  CHECK_THROWS_AS(locate_shock_cell({0.4, 0.3, 0.1}, 0.5), NumericalError);
}

TEST_CASE("monotonicity violation measure") {
  CHECK(max_monotonicity_violation({1.0, 0.7, 0.3, 0.0}) == 0.0);
  CHECK(max_monotonicity_violation({1.0, 0.5, 0.6, 0.0}) ==
        doctest::Approx(0.1).epsilon(1e-14));
  CHECK(max_monotonicity_violation({0.2, 0.5, 0.4, 0.45}) ==
        doctest::Approx(0.3).epsilon(1e-14));
}

TEST_CASE("scheme names round-trip and unknown names are rejected") {
  for (SchemeKind kind :
       {SchemeKind::Arithmetic, SchemeKind::Harmonic, SchemeKind::Integral,
        SchemeKind::SamExact, SchemeKind::SamJump, SchemeKind::SamLevelSet}) {
    CHECK(parse_scheme_kind(scheme_name(kind)) == kind);
  }
  CHECK_THROWS_AS(parse_scheme_kind("upwind"), ConfigError);
  CHECK(is_sam(SchemeKind::SamExact));
  CHECK(is_sam(SchemeKind::SamLevelSet));
  CHECK_FALSE(is_sam(SchemeKind::Integral));
}

TEST_CASE("forward step golden: five-node hand case with arithmetic faces") {
  const Grid grid = make_grid({0.0, 1.0}, 4);  // dx = 0.25
  CoefficientModel model;                      // k_max = 1, k_min = 0, p* = 0.5
  SchemeSpec scheme;
  scheme.kind = SchemeKind::Arithmetic;        // dt = dx^2/32

  const State s0 = make_state({1.0, 0.9, 0.6, 0.1, 0.0});
  const State s1 = ftcs_step(s0, grid, scheme, model);

  // Face coefficients: 1, 1, 1/2, 0. Interior updates by hand:
  //   dp_1 = (1/32)(1*(1.0-0.9) - 1*(0.9-0.6))   = -0.2/32
  //   dp_2 = (1/32)(1*(0.9-0.6) - 0.5*(0.6-0.1)) =  0.05/32
  //   dp_3 = (1/32)(0.5*(0.6-0.1) - 0*(0.1-0.0)) =  0.25/32
  CHECK(s1.p[0] == 1.0);
  CHECK(s1.p[1] == doctest::Approx(0.89375).epsilon(1e-15));
  CHECK(s1.p[2] == doctest::Approx(0.6015625).epsilon(1e-15));
  CHECK(s1.p[3] == doctest::Approx(0.1078125).epsilon(1e-15));
  CHECK(s1.p[4] == 0.0);
  CHECK(s1.t == doctest::Approx(0.25 * 0.25 / 32.0).epsilon(1e-15));
}

TEST_CASE("forward step golden: discrete conservation of the hand case") {
  const Grid grid = make_grid({0.0, 1.0}, 4);
  CoefficientModel model;
  SchemeSpec scheme;
  scheme.kind = SchemeKind::Arithmetic;
  const double dt = scheme.dt_factor * grid.dx * grid.dx;

  const State s0 = make_state({1.0, 0.9, 0.6, 0.1, 0.0});
  const State s1 = ftcs_step(s0, grid, scheme, model);

  double mass_change = 0.0;
  for (int j = 1; j <= 3; ++j) mass_change += grid.dx * (s1.p[j] - s0.p[j]);
  // Boundary-face fluxes of the initial profile: in at the left, zero at the
  // right (both neighbor coefficients vanish there).
  const double flux_in = -1.0 * (s0.p[1] - s0.p[0]) / grid.dx;
  const double flux_out = 0.0;
  CHECK(mass_change == doctest::Approx(dt * (flux_in - flux_out)).epsilon(1e-14));
  CHECK(mass_change == doctest::Approx(0.00078125).epsilon(1e-14));
}

TEST_CASE("forward step: uniform profile is a fixed point") {
  const Grid grid = make_grid({0.0, 1.0}, 8);
  CoefficientModel model;
  for (SchemeKind kind :
       {SchemeKind::Arithmetic, SchemeKind::Harmonic, SchemeKind::Integral}) {
    SchemeSpec scheme;
    scheme.kind = kind;
    const State s0 = make_state(std::vector<double>(9, 0.7));
    const State s1 = ftcs_step(s0, grid, scheme, model);
    for (int j = 0; j <= 8; ++j) CHECK(s1.p[j] == 0.7);
  }
}

TEST_CASE("step drivers reject the wrong scheme family") {
  const Grid grid = make_grid({0.0, 1.0}, 8);
  CoefficientModel model;
  const State s0 = make_state({1.0, 1.0, 0.9, 0.8, 0.6, 0.3, 0.1, 0.0, 0.0});

  SchemeSpec tracking;
  tracking.kind = SchemeKind::SamJump;
  CHECK_THROWS_AS(ftcs_step(s0, grid, tracking, model), ConfigError);

  SchemeSpec averaged;
  averaged.kind = SchemeKind::Harmonic;
  ShockTracker tracker = make_jump_tracker(0.55);
  CHECK_THROWS_AS(sam_step(s0, grid, averaged, model, tracker), ConfigError);
}

TEST_CASE("auxiliary shock-cell geometry invariants") {
  const double dx = 0.1;
  for (double frac : {0.05, 0.3, 0.5, 0.77, 0.95}) {
    const double x_i = 0.3;
    const AuxiliaryGeometry g = make_auxiliary_geometry(dx, x_i, x_i + frac * dx);
    CHECK(g.dx_star == doctest::Approx(frac * dx).epsilon(1e-14));
    CHECK(g.vol_i == doctest::Approx((dx + g.dx_star) / 2.0).epsilon(1e-14));
    CHECK(g.vol_ip1 == doctest::Approx(dx - g.dx_star / 2.0).epsilon(1e-14));
    // The three control volumes tile two cells, and the threshold-valued
    // sliver between the shifted faces is exactly half a cell wide.
    CHECK(g.vol_i + dx / 2.0 + g.vol_ip1 == doctest::Approx(2.0 * dx).epsilon(1e-14));
    CHECK(g.face_right - g.face_left == doctest::Approx(dx / 2.0).epsilon(1e-14));
    CHECK(g.face_left == doctest::Approx(x_i + g.dx_star / 2.0).epsilon(1e-14));
  }
}

TEST_CASE("no-overshoot bound on the front-cell guard") {
  // a/(1 - a) with a = 2 dt_factor k_max.
  CHECK(monotone_engagement_bound(1.0 / 32.0, 1.0) ==
        doctest::Approx(1.0 / 15.0).epsilon(1e-14));
  CHECK(monotone_engagement_bound(1.0 / 64.0, 1.0) ==
        doctest::Approx((1.0 / 32.0) / (31.0 / 32.0)).epsilon(1e-14));
}

TEST_CASE("zero-length run returns only the initial condition") {
  ProblemSpec problem;
  problem.t_end = 0.0;
  const Grid grid = make_grid(problem.domain, 25);
  SchemeSpec scheme;
  scheme.kind = SchemeKind::SamJump;
  ProbeSpec probes;
  probes.positions = {0.32};

  const RunRecord rec = run(problem, grid, scheme, probes);
  REQUIRE(rec.times.size() == 1);
  CHECK(rec.times[0] == 0.0);
  REQUIRE(rec.probe_series.size() == 1);
  CHECK(rec.probe_series[0].size() == 1);
  CHECK(rec.xi_series.size() == 1);
  CHECK(rec.final_state.p == rec.initial_state.p);
  CHECK(rec.final_state.t == 0.0);
  CHECK(rec.max_conservation_residual == 0.0);
}

TEST_CASE("front-tracking step: interface advances and stays bracketed") {
  ProblemSpec problem;
  const Grid grid = make_grid(problem.domain, 50);
  CoefficientModel model = problem.model;
  SchemeSpec scheme;
  scheme.kind = SchemeKind::SamJump;

  State state = build_initial_condition(problem, grid);
  // Seed conditioning as the run driver does: nodes left of the interface
  // hold at least the threshold value.
  for (int m = 1; m <= state.shock_index; ++m)
    state.p[m] = std::max(state.p[m], model.p_star);
  ShockTracker tracker = make_jump_tracker(state.xi);

  double xi_prev = state.xi;
  for (int step = 0; step < 200; ++step) {
    state = sam_step(state, grid, scheme, model, tracker);
    CHECK(state.xi >= xi_prev - 1e-14);  // front never recedes
    xi_prev = state.xi;
    REQUIRE(state.shock_index >= 1);
    REQUIRE(state.shock_index < grid.n_cells);
    CHECK(grid.x[state.shock_index] <= state.xi + 1e-12);
    CHECK(state.xi <= grid.x[state.shock_index + 1] + 1e-12);
    CHECK(state.p[state.shock_index] >= model.p_star - 1e-12);
    CHECK(state.p[state.shock_index + 1] <= model.p_star + 1e-12);
    CHECK(max_monotonicity_violation(state.p) <= 1e-12);
  }
  CHECK(state.t == doctest::Approx(200 * scheme.dt_factor * grid.dx * grid.dx)
                       .epsilon(1e-12));
}

TEST_CASE("instability is reported as a numerical failure with the step index") {
  ProblemSpec problem;
  problem.t_end = 0.05;
  const Grid grid = make_grid(problem.domain, 25);
  SchemeSpec scheme;
  scheme.kind = SchemeKind::Arithmetic;
  scheme.dt_factor = 1.0;  // far beyond the explicit stability limit
  ProbeSpec probes;

  try {
    run(problem, grid, scheme, probes);
    FAIL("expected a numerical failure");
  } catch (const NumericalError& e) {
    CHECK(e.step_index >= 0);
    CHECK(std::string(e.what()).find("[step") != std::string::npos);
  }
}

TEST_CASE("run driver: snapshots land on the requested times") {
  ProblemSpec problem;
  problem.t_end = 0.02;
  const Grid grid = make_grid(problem.domain, 25);
  SchemeSpec scheme;
  scheme.kind = SchemeKind::SamExact;
  ProbeSpec probes;
  probes.positions = {0.32};
  probes.snapshot_times = {0.0, 0.01, 0.02};

  const RunRecord rec = run(problem, grid, scheme, probes);
  REQUIRE(rec.snapshots.size() == 3);
  const double dt = rec.metadata.dt;
  for (std::size_t q = 0; q < rec.snapshots.size(); ++q) {
    CHECK(std::abs(rec.snapshots[q].t - probes.snapshot_times[q]) <= dt / 2 + 1e-15);
    CHECK(rec.snapshots[q].x.size() == rec.snapshots[q].p.size());
    // Closed-form reference values ride along for this problem.
    CHECK(rec.snapshots[q].p_exact.size() == rec.snapshots[q].p.size());
  }
  // Probe series snapped to the nearest node.
  REQUIRE(rec.probe_positions.size() == 1);
  CHECK(rec.probe_positions[0] == doctest::Approx(0.32).epsilon(1e-12));
  CHECK(rec.times.size() == rec.probe_series[0].size());
  CHECK(rec.times.size() == rec.xi_series.size());
}
