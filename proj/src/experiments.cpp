/// @file experiments.cpp
/// @brief Batch experiment execution and CSV emission.

#include "gpme/experiments.hpp"

#include <cmath>
#include <filesystem>
#include <future>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "gpme/csv.hpp"
#include "gpme/errors.hpp"
#include "gpme/initial_condition.hpp"

namespace gpme {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

/// Time series longer than this are thinned for CSV emission (the in-memory
/// record keeps full resolution); the refined-window runs step on the fine
/// spacing and would otherwise emit multi-million-row files.
constexpr std::size_t kMaxCsvSamples = 20001;

struct Task {
  SchemeKind kind;
  int n = 0;
  bool amr = false;
};

std::vector<Task> build_tasks(const ExperimentConfig& config) {
  std::vector<Task> tasks;
  for (SchemeKind kind : config.scheme_kinds) {
    for (int n : config.grids) {
      if (config.amr_n_inner > 0 && kind == SchemeKind::Integral) {
        tasks.push_back({kind, n, true});
      }
      tasks.push_back({kind, n, false});
    }
  }
  return tasks;
}

ExperimentRun execute_one(const ExperimentConfig& config, const Task& task) {
  const Grid grid = make_grid(config.problem.domain, task.n);
  const SchemeSpec scheme = scheme_for(config, task.kind);
  const ProbeSpec probes{config.probes, config.snapshot_times};

  ExperimentRun out;
  out.record = task.amr
                   ? run_with_amr(config.problem, grid, config.amr_n_inner,
                                  scheme, probes)
                   : run(config.problem, grid, scheme, probes);
  out.label = out.record.metadata.scheme;
  out.n_cells = task.n;

  if (has_exact_solution(config.problem)) {
    const ExactSolution oracle = oracle_for(config.problem);
    const double t_final = out.record.final_state.t;
    if (task.amr) {
      std::vector<double> exact(out.record.final_positions.size());
      for (std::size_t j = 0; j < exact.size(); ++j) {
        exact[j] = exact_value(out.record.final_positions[j], t_final, oracle);
      }
      out.errors = error_norms_weighted(out.record.final_state.p, exact,
                                        out.record.final_volumes);
      out.errors.dx = out.record.metadata.dx;
    } else {
      std::vector<double> exact(grid.x.size());
      for (std::size_t j = 0; j < exact.size(); ++j) {
        exact[j] = exact_value(grid.x[j], t_final, oracle);
      }
      out.errors = error_norms(out.record.final_state.p, exact, grid.dx);
    }
    out.errors.scheme = out.label;
    out.errors.n_cells = task.n;
    out.has_errors = true;
  }
  return out;
}

/// Sample indices for CSV emission: every `stride`-th sample plus the last.
std::vector<std::size_t> csv_indices(std::size_t len) {
  std::vector<std::size_t> idx;
  if (len == 0) return idx;
  const std::size_t stride = len > kMaxCsvSamples ? (len - 1) / (kMaxCsvSamples - 1) : 1;
  for (std::size_t k = 0; k < len; k += stride) idx.push_back(k);
  if (idx.back() != len - 1) idx.push_back(len - 1);
  return idx;
}

std::string run_stem(const ExperimentRun& run) {
  return run.label + "_N" + std::to_string(run.n_cells);
}

void write_run_csvs(const std::filesystem::path& dir, const ExperimentRun& run) {
  const RunRecord& rec = run.record;
  const std::vector<std::size_t> idx = csv_indices(rec.times.size());

  for (std::size_t q = 0; q < rec.probe_series.size(); ++q) {
    CsvWriter csv((dir / ("probe" + std::to_string(q) + "_" + run_stem(run) + ".csv")).string(),
                  {"t", "p"});
    for (std::size_t k : idx) csv.row(rec.times[k], rec.probe_series[q][k]);
  }

  {
    CsvWriter csv((dir / ("front_" + run_stem(run) + ".csv")).string(), {"t", "xi"});
    for (std::size_t k : idx) csv.row(rec.times[k], rec.xi_series[k]);
  }

  for (std::size_t q = 0; q < rec.snapshots.size(); ++q) {
    const Snapshot& snap = rec.snapshots[q];
    const bool with_exact = !snap.p_exact.empty();
    CsvWriter csv((dir / ("snapshot" + std::to_string(q) + "_" + run_stem(run) + ".csv")).string(),
                  with_exact ? std::vector<std::string>{"x", "p", "p_exact"}
                             : std::vector<std::string>{"x", "p"});
    for (std::size_t j = 0; j < snap.x.size(); ++j) {
      if (with_exact) {
        csv.row(snap.x[j], snap.p[j], snap.p_exact[j]);
      } else {
        csv.row(snap.x[j], snap.p[j]);
      }
    }
  }
}

void write_summary(const std::filesystem::path& dir,
                   const std::vector<ExperimentRun>& runs) {
  // Fitted orders are per scheme label over its grid sweep; every row of a
  // group carries the group's fit (nan when fewer than two usable points).
  std::map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    groups[runs[i].label].push_back(i);
  }
  std::map<std::string, std::pair<double, double>> fitted;
  for (const auto& [label, members] : groups) {
    std::vector<double> dxs, l2s, linfs;
    for (std::size_t i : members) {
      if (!runs[i].has_errors) continue;
      if (!(runs[i].errors.l2 > 0.0) || !(runs[i].errors.linf > 0.0)) continue;
      dxs.push_back(runs[i].errors.dx);
      l2s.push_back(runs[i].errors.l2);
      linfs.push_back(runs[i].errors.linf);
    }
    if (dxs.size() >= 2) {
      fitted[label] = {convergence_order(dxs, l2s), convergence_order(dxs, linfs)};
    } else {
      fitted[label] = {kNan, kNan};
    }
  }

  CsvWriter csv((dir / "summary.csv").string(),
                {"scheme", "N", "dx", "l2", "linf", "order", "l2_unweighted",
                 "order_linf"});
  for (const auto& run : runs) {
    const auto& [order_l2, order_linf] = fitted[run.label];
    if (run.has_errors) {
      csv.row(run.label, run.n_cells, run.errors.dx, run.errors.l2,
              run.errors.linf, order_l2, run.errors.l2_unweighted, order_linf);
    } else {
      csv.row(run.label, run.n_cells, run.record.metadata.dx, kNan, kNan, kNan,
              kNan, kNan);
    }
  }
}

}  // namespace

std::vector<ExperimentRun> execute_runs(const ExperimentConfig& config) {
  const std::vector<std::string> problems = validate_config(config);
  if (!problems.empty()) {
    std::string joined;
    for (const auto& line : problems) {
      if (!joined.empty()) joined += "\n";
      joined += line;
    }
    throw ConfigError(joined);
  }

  const std::vector<Task> tasks = build_tasks(config);
  std::vector<std::future<ExperimentRun>> futures;
  futures.reserve(tasks.size());
  for (const Task& task : tasks) {
    futures.push_back(std::async(std::launch::async, execute_one,
                                 std::cref(config), task));
  }
  std::vector<ExperimentRun> runs;
  runs.reserve(tasks.size());
  for (auto& f : futures) runs.push_back(f.get());
  return runs;
}

int run_experiment(const ExperimentConfig& config) {
  const std::vector<ExperimentRun> runs = execute_runs(config);

  const std::filesystem::path dir(config.output_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw ConfigError("output_dir: cannot create '" + config.output_dir +
                      "': " + ec.message());
  }

  for (const auto& run : runs) write_run_csvs(dir, run);
  write_summary(dir, runs);
  return 0;
}

}  // namespace gpme
