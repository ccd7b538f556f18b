/// @file config.cpp
/// @brief Config parsing, built-in experiment presets, and validation.

#include "gpme/config.hpp"

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <sstream>

#include "gpme/errors.hpp"

namespace gpme {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> items;
  std::string current;
  std::istringstream in(value);
  while (std::getline(in, current, ',')) {
    current = trim(current);
    if (!current.empty()) items.push_back(current);
  }
  return items;
}

double to_double(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &used);
  } catch (const std::exception&) {
    throw ConfigError("config: key '" + key + "': expected a number, got '" + value + "'");
  }
  if (used != value.size()) {
    throw ConfigError("config: key '" + key + "': expected a number, got '" + value + "'");
  }
  return v;
}

int to_int(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(value, &used);
  } catch (const std::exception&) {
    throw ConfigError("config: key '" + key + "': expected an integer, got '" + value + "'");
  }
  if (used != value.size()) {
    throw ConfigError("config: key '" + key + "': expected an integer, got '" + value + "'");
  }
  return static_cast<int>(v);
}

std::vector<double> to_double_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  for (const auto& item : split_list(value)) out.push_back(to_double(key, item));
  return out;
}

std::vector<int> to_int_list(const std::string& key, const std::string& value) {
  std::vector<int> out;
  for (const auto& item : split_list(value)) out.push_back(to_int(key, item));
  return out;
}

/// Initial-condition options are collected raw during parsing and assembled
/// once the variant is known, so option/variant mismatches can be rejected.
struct RawIc {
  std::string variant = "exact-profile";
  std::optional<double> t0;
  double k_min_gen = 0.01;
  double x_knee = 0.5;
  std::vector<double> values;
  bool t0_set = false, k_min_gen_set = false, x_knee_set = false, values_set = false;
};

InitialConditionSpec assemble_ic(const RawIc& raw) {
  auto reject = [&](bool set, const char* key, const char* variant) {
    if (set) {
      throw ConfigError(std::string("config: key '") + key +
                        "' only applies to the " + variant + " initial condition");
    }
  };
  if (raw.variant == "exact-profile") {
    reject(raw.x_knee_set, "ic.x_knee", "piecewise-linear");
    reject(raw.values_set, "ic.values", "custom");
    return ExactAtTime{raw.t0, raw.k_min_gen};
  }
  if (raw.variant == "piecewise-linear") {
    reject(raw.t0_set, "ic.t0", "exact-profile");
    reject(raw.k_min_gen_set, "ic.k_min_gen", "exact-profile");
    reject(raw.values_set, "ic.values", "custom");
    return PiecewiseLinear{raw.x_knee};
  }
  if (raw.variant == "custom") {
    reject(raw.t0_set, "ic.t0", "exact-profile");
    reject(raw.k_min_gen_set, "ic.k_min_gen", "exact-profile");
    reject(raw.x_knee_set, "ic.x_knee", "piecewise-linear");
    if (!raw.values_set || raw.values.empty()) {
      throw ConfigError("ic.values: required for the custom initial condition");
    }
    return Custom{raw.values};
  }
  throw ConfigError("ic.variant: unknown variant '" + raw.variant +
                    "' (expected exact-profile, piecewise-linear, or custom)");
}

}  // namespace

ExperimentConfig parse_config_text(const std::string& text) {
  ExperimentConfig config;
  RawIc ic;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config: expected 'key = value' at line " +
                        std::to_string(line_no));
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("config: missing key at line " + std::to_string(line_no));
    }

    if (key == "problem.k_max") config.problem.model.k_max = to_double(key, value);
    else if (key == "problem.k_min") config.problem.model.k_min = to_double(key, value);
    else if (key == "problem.p_star") config.problem.model.p_star = to_double(key, value);
    else if (key == "problem.x_lo") config.problem.domain.lo = to_double(key, value);
    else if (key == "problem.x_hi") config.problem.domain.hi = to_double(key, value);
    else if (key == "problem.bc_left") config.problem.bc_left = to_double(key, value);
    else if (key == "problem.bc_right") config.problem.bc_right = to_double(key, value);
    else if (key == "problem.t_end") config.problem.t_end = to_double(key, value);
    else if (key == "ic.variant") ic.variant = value;
    else if (key == "ic.t0") {
      ic.t0_set = true;
      ic.t0 = (value == "auto") ? std::optional<double>{} : std::optional<double>{to_double(key, value)};
    } else if (key == "ic.k_min_gen") {
      ic.k_min_gen_set = true;
      ic.k_min_gen = to_double(key, value);
    } else if (key == "ic.x_knee") {
      ic.x_knee_set = true;
      ic.x_knee = to_double(key, value);
    } else if (key == "ic.values") {
      ic.values_set = true;
      ic.values = to_double_list(key, value);
    } else if (key == "grids") {
      config.grids = to_int_list(key, value);
    } else if (key == "schemes") {
      config.scheme_kinds.clear();
      for (const auto& name : split_list(value)) {
        config.scheme_kinds.push_back(parse_scheme_kind(name));
      }
    } else if (key == "scheme.eps_factor") {
      config.scheme.eps_factor = to_double(key, value);
    } else if (key == "scheme.dt_factor") {
      config.scheme.dt_factor = to_double(key, value);
    } else if (key == "scheme.p_right_stencil") {
      if (value == "zero") config.scheme.p_right_stencil = RightStencil::Zero;
      else if (value == "two-cells-right") config.scheme.p_right_stencil = RightStencil::TwoCellsRight;
      else throw ConfigError("scheme.p_right_stencil: expected 'zero' or 'two-cells-right', got '" + value + "'");
    } else if (key == "probes") {
      config.probes = to_double_list(key, value);
    } else if (key == "snapshot_times") {
      config.snapshot_times = to_double_list(key, value);
    } else if (key == "amr.n_inner") {
      config.amr_n_inner = to_int(key, value);
    } else if (key == "output_dir") {
      config.output_dir = value;
    } else if (key == "experiment") {
      config.experiment = value;
    } else {
      throw ConfigError("config: unknown key '" + key + "' (line " +
                        std::to_string(line_no) + ")");
    }
  }
  config.problem.initial_condition = assemble_ic(ic);
  return config;
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

namespace {

ExperimentConfig make_preset(const std::string& name) {
  ExperimentConfig c;
  c.experiment = name;
  c.output_dir = name;
  if (name == "convergence-table") {
    c.problem.initial_condition = ExactAtTime{0.0375, 0.01};
    c.problem.t_end = 0.05;
    c.grids = {25, 50, 100, 200};
    c.scheme_kinds = {SchemeKind::Arithmetic, SchemeKind::Harmonic,
                      SchemeKind::Integral,   SchemeKind::SamExact,
                      SchemeKind::SamJump,    SchemeKind::SamLevelSet};
    c.probes = {0.32};
    c.snapshot_times = {0.05};
  } else if (name == "scheme-comparison") {
    c.problem.initial_condition = ExactAtTime{};
    c.problem.t_end = 0.05;
    c.grids = {25};
    c.scheme_kinds = {SchemeKind::Arithmetic, SchemeKind::Harmonic,
                      SchemeKind::Integral, SchemeKind::SamJump};
    c.probes = {0.32};
    c.snapshot_times = {0.05};
  } else if (name == "waiting-time") {
    c.problem.initial_condition = PiecewiseLinear{0.5};
    c.problem.t_end = 0.2;
    c.grids = {100};
    c.scheme_kinds = {SchemeKind::SamJump};
    c.scheme.p_right_stencil = RightStencil::TwoCellsRight;
    c.probes = {0.32};
    c.snapshot_times = {0.0, 0.05, 0.1, 0.2};
  } else if (name == "amr-probe") {
    c.problem.initial_condition = ExactAtTime{};
    c.problem.t_end = 0.05;
    c.grids = {100};
    c.scheme_kinds = {SchemeKind::Integral};
    c.amr_n_inner = 10;
    c.probes = {0.32};
    c.snapshot_times = {0.05};
  } else if (name == "front-tracking") {
    c.problem.initial_condition = ExactAtTime{0.0375, 0.01};
    c.problem.t_end = 0.05;
    c.grids = {25, 50, 100};
    c.scheme_kinds = {SchemeKind::SamJump, SchemeKind::SamLevelSet};
  } else {
    throw ConfigError("experiment: unknown preset '" + name + "'");
  }
  return c;
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {
      "convergence-table", "scheme-comparison", "waiting-time", "amr-probe",
      "front-tracking"};
  return names;
}

bool is_preset(const std::string& name) {
  const auto& names = preset_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

ExperimentConfig preset_config(const std::string& name) {
  if (!is_preset(name)) {
    std::string known;
    for (const auto& n : preset_names()) known += (known.empty() ? "" : ", ") + n;
    throw ConfigError("experiment: unknown preset '" + name + "' (known: " + known + ")");
  }
  return make_preset(name);
}

std::string preset_description(const std::string& name) {
  if (name == "convergence-table")
    return "error norms and fitted orders for every scheme over N = 25..200";
  if (name == "scheme-comparison")
    return "temporal probe at x = 0.32 for four schemes on a coarse grid (N = 25)";
  if (name == "waiting-time")
    return "delayed front start from a piecewise-linear profile (N = 100)";
  if (name == "amr-probe")
    return "moving-window refinement vs. unrefined integral run (N = 100, 10x)";
  if (name == "front-tracking")
    return "tracked-front trajectories for the jump and level-set trackers";
  return "";
}

std::vector<std::string> validate_config(const ExperimentConfig& config) {
  std::vector<std::string> out;
  const CoefficientModel& m = config.problem.model;
  const Interval& dom = config.problem.domain;

  if (!(m.k_max > 0.0)) out.push_back("problem.k_max: must be positive");
  if (m.k_min < 0.0 || m.k_min >= m.k_max) {
    out.push_back("problem.k_min: must satisfy 0 <= k_min < k_max");
  }
  if (!(dom.hi > dom.lo)) out.push_back("problem.x_lo: domain requires x_lo < x_hi");
  if (!(config.problem.bc_left >= m.p_star && m.p_star >= config.problem.bc_right)) {
    out.push_back("problem.p_star: must lie between bc_right and bc_left");
  }
  if (!(config.problem.t_end >= 0.0)) out.push_back("problem.t_end: must be non-negative");

  if (config.grids.empty()) out.push_back("grids: at least one grid size required");
  for (int n : config.grids) {
    if (n < 4) {
      out.push_back("grids: N must be at least 4");
      break;
    }
  }
  if (config.scheme_kinds.empty()) out.push_back("schemes: at least one scheme required");

  for (double px : config.probes) {
    if (!(px > dom.lo && px < dom.hi)) {
      out.push_back("probes: probe outside domain (x = " + std::to_string(px) + ")");
    }
  }
  for (double ts : config.snapshot_times) {
    if (ts < 0.0 || ts > config.problem.t_end + 1e-15) {
      out.push_back("snapshot_times: must lie in [0, t_end]");
    }
  }

  if (!(config.scheme.dt_factor > 0.0)) {
    out.push_back("scheme.dt_factor: must be positive");
  } else if (m.k_max > 0.0 && config.scheme.dt_factor > 0.5 / m.k_max + 1e-15) {
    out.push_back("scheme.dt_factor: stability: dt_factor exceeds explicit limit (1/(2 k_max))");
  }
  if (config.scheme.eps_factor < 0.0) {
    out.push_back("scheme.eps_factor: must be non-negative");
  }

  const bool any_sam = std::any_of(config.scheme_kinds.begin(), config.scheme_kinds.end(),
                                   [](SchemeKind k) { return is_sam(k); });
  if (any_sam && m.k_max > 0.0 && config.scheme.dt_factor > 0.0) {
    const double bound = monotone_engagement_bound(config.scheme.dt_factor, m.k_max);
    if (config.scheme.eps_factor < bound - 1e-15) {
      out.push_back(
          "scheme.eps_factor: below the no-overshoot bound of the front-cell "
          "guard (needs >= a/(1-a) with a = 2 dt_factor k_max; see README)");
    }
  }

  const bool uses_exact_tracker =
      std::find(config.scheme_kinds.begin(), config.scheme_kinds.end(),
                SchemeKind::SamExact) != config.scheme_kinds.end();
  const bool exact_ic =
      std::holds_alternative<ExactAtTime>(config.problem.initial_condition);
  if (uses_exact_tracker && !exact_ic) {
    out.push_back("schemes: sam-exact requires the exact-profile initial condition");
  }

  if (config.amr_n_inner < 0) {
    out.push_back("amr.n_inner: must be non-negative");
  }
  if (config.amr_n_inner > 0) {
    const bool all_integral =
        std::all_of(config.scheme_kinds.begin(), config.scheme_kinds.end(),
                    [](SchemeKind k) { return k == SchemeKind::Integral; });
    if (!all_integral) {
      out.push_back("amr.n_inner: window refinement requires the integral scheme");
    }
  }

  if (const auto* ic = std::get_if<ExactAtTime>(&config.problem.initial_condition)) {
    if (ic->t0 && !(*ic->t0 > 0.0)) out.push_back("ic.t0: must be positive");
    if (ic->k_min_gen < 0.0 || ic->k_min_gen >= m.k_max) {
      out.push_back("ic.k_min_gen: must satisfy 0 <= k_min_gen < k_max");
    }
  } else if (const auto* pl = std::get_if<PiecewiseLinear>(&config.problem.initial_condition)) {
    if (!(pl->x_knee > dom.lo && pl->x_knee < dom.hi)) {
      out.push_back("ic.x_knee: must lie inside the domain");
    }
  } else if (const auto* cv = std::get_if<Custom>(&config.problem.initial_condition)) {
    for (int n : config.grids) {
      if (cv->values.size() != static_cast<std::size_t>(n) + 1) {
        out.push_back("ic.values: needs exactly N+1 entries (grid N = " +
                      std::to_string(n) + " expects " + std::to_string(n + 1) + ")");
      }
    }
  }

  return out;
}

}  // namespace gpme
