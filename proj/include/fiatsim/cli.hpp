#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>

namespace fiatsim::cli {

/// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kConfigError = 1,
  kIoError = 2,
  kAttractorFailed = 3,
  kInvariantViolated = 4,
};

struct CliConfig {
  /// Defaults are used when no config file is given.
  std::optional<std::filesystem::path> config_path;
  std::filesystem::path out_dir = "fiatsim-out";
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> iterations;
  bool svg = false;
  bool force = false;
  /// Worker threads for sweeps; 0 = hardware concurrency.
  unsigned threads = 0;
};

/// Single run: writes trajectory.csv, trades.csv and optionally price.svg.
int cmd_run(const CliConfig &config, std::ostream &out, std::ostream &err);

/// Start-price sweep: writes summary.csv, runs/*.csv and optionally sweep.svg.
/// Exit 0 iff the settled values agree within attractor_rel_tolerance.
int cmd_sweep(const CliConfig &config, std::ostream &out, std::ostream &err);

/// Runs the configured trajectory twice, auditing invariants each iteration
/// and comparing the two outputs byte for byte. Writes no files.
int cmd_verify(const CliConfig &config, std::ostream &out, std::ostream &err);

} // namespace fiatsim::cli
