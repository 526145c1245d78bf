#include "fiatsim/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char **argv) {
  using fiatsim::cli::CliConfig;

  CLI::App app{"Agent-based fiat money price discovery simulator"};
  app.require_subcommand(1);

  CliConfig config;
  std::string config_path;
  std::uint64_t seed = 0;
  std::size_t iterations = 0;

  auto add_common = [&](CLI::App *cmd, bool writes_output) {
    cmd->add_option("--config", config_path, "Key-value config file")->check(CLI::ExistingFile);
    cmd->add_option("--seed", seed, "Override the seed list with one seed");
    cmd->add_option("--iterations", iterations, "Override n_iterations")
        ->check(CLI::PositiveNumber);
    if (writes_output) {
      cmd->add_option("--out", config.out_dir, "Output directory (created if absent)");
      cmd->add_flag("--svg", config.svg, "Also emit an SVG chart");
      cmd->add_flag("--force", config.force, "Overwrite existing output files");
    }
  };

  auto *run = app.add_subcommand("run", "Single run: trajectory and trades CSVs");
  auto *sweep = app.add_subcommand("sweep", "Start-price sweep and attractor comparison");
  auto *verify = app.add_subcommand("verify", "Invariant audit and determinism replay");
  add_common(run, true);
  add_common(sweep, true);
  add_common(verify, false);
  sweep->add_option("--threads", config.threads, "Worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    // Usage problems, including a missing config file, are config errors.
    return code == 0 ? 0 : fiatsim::cli::kConfigError;
  }

  for (auto *cmd : {run, sweep, verify}) {
    if (!*cmd) continue;
    if (cmd->count("--config")) config.config_path = config_path;
    if (cmd->count("--seed")) config.seed = seed;
    if (cmd->count("--iterations")) config.iterations = iterations;
  }

  if (*run) return fiatsim::cli::cmd_run(config, std::cout, std::cerr);
  if (*sweep) return fiatsim::cli::cmd_sweep(config, std::cout, std::cerr);
  return fiatsim::cli::cmd_verify(config, std::cout, std::cerr);
}
