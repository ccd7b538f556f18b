#pragma once
/// @file config.hpp
/// @brief Experiment configuration: flat dotted-key config files, built-in
///        experiment presets, and validation producing field-naming
///        diagnostics.

#include <string>
#include <vector>

#include "gpme/model.hpp"
#include "gpme/solver.hpp"

namespace gpme {

/// Complete description of one batch experiment: the problem, the grid and
/// scheme sweeps, sampling locations, and output destination.
struct ExperimentConfig {
  ProblemSpec problem;
  std::vector<int> grids{25, 50, 100, 200};
  std::vector<SchemeKind> scheme_kinds{SchemeKind::SamJump};
  SchemeSpec scheme;  ///< shared scheme parameters; `kind` comes from scheme_kinds
  std::vector<double> probes;
  std::vector<double> snapshot_times;
  /// > 0 runs the moving-window refinement (plus an unrefined comparison run
  /// per grid); 0 disables it.
  int amr_n_inner = 0;
  std::string output_dir = "out";
  std::string experiment = "custom";
};

/// Shared scheme parameters specialized to one scheme kind of the sweep.
inline SchemeSpec scheme_for(const ExperimentConfig& config, SchemeKind kind) {
  SchemeSpec s = config.scheme;
  s.kind = kind;
  return s;
}

/// Parses flat dotted-key config text: one `key = value` per line, `#` starts
/// a comment, lists are comma-separated. Unknown keys, malformed values, and
/// inconsistent initial-condition options throw ConfigError.
ExperimentConfig parse_config_text(const std::string& text);

/// Reads and parses a config file. Throws ConfigError when unreadable.
ExperimentConfig load_config_file(const std::string& path);

/// Built-in experiment names, in display order.
const std::vector<std::string>& preset_names();

bool is_preset(const std::string& name);

/// Returns the named built-in experiment. Throws ConfigError for unknown
/// names.
ExperimentConfig preset_config(const std::string& name);

/// One-line description of a built-in experiment.
std::string preset_description(const std::string& name);

/// Returns every violated invariant, one line each naming the offending
/// field; an empty list means the config is runnable.
std::vector<std::string> validate_config(const ExperimentConfig& config);

}  // namespace gpme
