/// @file main.cpp
/// @brief Command-line entry point: `run`, `presets`, `validate`.
///
/// Exit codes: 0 success, 1 configuration error (including usage and
/// validation failures), 2 numerical failure during a run.

#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "gpme/config.hpp"
#include "gpme/errors.hpp"
#include "gpme/experiments.hpp"

namespace {

gpme::ExperimentConfig resolve(const std::string& source) {
  if (gpme::is_preset(source)) return gpme::preset_config(source);
  return gpme::load_config_file(source);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Finite-volume experiments for nonlinear diffusion with a step "
      "coefficient and a tracked moving interface"};
  app.require_subcommand(1);

  std::string run_source;
  std::string output_dir;
  auto* run_cmd = app.add_subcommand(
      "run", "Execute an experiment from a config file or preset name");
  run_cmd->add_option("config", run_source, "Config file path or preset name")
      ->required();
  run_cmd->add_option("--output-dir", output_dir,
                      "Override the configured output directory");

  auto* presets_cmd =
      app.add_subcommand("presets", "List the built-in experiment presets");

  std::string validate_source;
  auto* validate_cmd = app.add_subcommand(
      "validate", "Check a config file or preset, reporting every violation");
  validate_cmd
      ->add_option("config", validate_source, "Config file path or preset name")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help/usage text
    return code == 0 ? 0 : 1;
  }

  try {
    if (run_cmd->parsed()) {
      gpme::ExperimentConfig config = resolve(run_source);
      if (!output_dir.empty()) config.output_dir = output_dir;
      return gpme::run_experiment(config);
    }
    if (presets_cmd->parsed()) {
      for (const auto& name : gpme::preset_names()) {
        std::printf("%-18s %s\n", name.c_str(),
                    gpme::preset_description(name).c_str());
      }
      return 0;
    }
    if (validate_cmd->parsed()) {
      const gpme::ExperimentConfig config = resolve(validate_source);
      const auto problems = gpme::validate_config(config);
      if (problems.empty()) {
        std::printf("ok\n");
        return 0;
      }
      for (const auto& line : problems) {
        std::fprintf(stderr, "%s\n", line.c_str());
      }
      return 1;
    }
  } catch (const gpme::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 1;
  } catch (const gpme::NumericalError& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return 2;
  }
  return 0;
}
