#pragma once
/// @file grid.hpp
/// @brief Uniform node-centered finite-volume mesh with Dirichlet end nodes,
///        and the evolving solver state attached to it.

#include <cmath>
#include <limits>
#include <vector>

#include "gpme/errors.hpp"
#include "gpme/model.hpp"

namespace gpme {

/// Uniform mesh of n_cells cells, i.e. n_cells + 1 nodes x_0 .. x_N with the
/// two end nodes pinned by the Dirichlet data, leaving N - 1 interior
/// unknowns.
struct Grid {
  int n_cells = 0;        ///< N: number of cells (nodes are 0..N)
  double dx = 0.0;        ///< uniform spacing
  std::vector<double> x;  ///< node coordinates, x.front() = lo, x.back() = hi
  Interval domain;
};

inline Grid make_grid(const Interval& domain, int n_cells) {
  if (n_cells < 4) throw ConfigError("grids: N must be at least 4");
  if (!(domain.hi > domain.lo)) throw ConfigError("problem.domain: x_lo must be < x_hi");
  Grid g;
  g.n_cells = n_cells;
  g.domain = domain;
  g.dx = (domain.hi - domain.lo) / n_cells;
  g.x.resize(n_cells + 1);
  for (int j = 0; j <= n_cells; ++j) g.x[j] = domain.lo + j * g.dx;
  g.x[n_cells] = domain.hi;
  return g;
}

/// Index of the node nearest to position `pos` (clamped to the node range).
inline int nearest_node(const Grid& g, double pos) {
  const long j = std::lround((pos - g.domain.lo) / g.dx);
  if (j < 0) return 0;
  if (j > g.n_cells) return g.n_cells;
  return static_cast<int>(j);
}

/// Evolving solution state: node values (end nodes pinned), current time, the
/// tracked interface position xi, and the shock cell index i such that
/// p_i >= p_star >= p_{i+1} (equivalently x_i <= xi <= x_{i+1} for the
/// front-tracking schemes).
struct State {
  std::vector<double> p;
  double t = 0.0;
  double xi = std::numeric_limits<double>::quiet_NaN();
  int shock_index = -1;
};

}  // namespace gpme
