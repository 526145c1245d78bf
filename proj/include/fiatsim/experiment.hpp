#pragma once

#include "fiatsim/engine.hpp"
#include "fiatsim/metrics.hpp"
#include "fiatsim/params.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fiatsim {

struct SweepSpec {
  MarketParams base_params;
  std::vector<double> start_prices{0.2, 1.0, 5.0, 25.0};
  std::vector<std::uint64_t> seeds{1, 2, 3};
  std::size_t n_iterations = 5000;
  std::size_t convergence_window = 500;
  double cv_tolerance = 0.02;
};

/// Problems with the sweep itself (empty lists, non-positive start prices, a window
/// longer than the run). Per-run parameter errors are reported per run instead.
std::vector<std::string> validate_sweep_spec(const SweepSpec &spec);

struct SweepRun {
  double start_price = 0.0;
  std::uint64_t seed = 0;
  /// False when the run could not execute; `error` says why.
  bool ok = false;
  std::string error;
  ConvergenceReport convergence;
  std::vector<SnapshotRow> snapshots;

  std::vector<double> avg_price_series() const;
};

struct SweepReport {
  /// Ordered by (start_price, seed) as listed in the SweepSpec.
  std::vector<SweepRun> runs;
  bool all_converged = false;
  /// (max - min) / mean of settled values over converged runs; defined only
  /// when at least two runs converged.
  std::optional<double> attractor_spread;
};

/// One run per (start_price, seed) pair, spread across `threads` workers
/// (0 = hardware concurrency). The report does not depend on the thread count.
/// Throws std::invalid_argument if validate_sweep_spec reports problems.
SweepReport run_sweep(const SweepSpec &spec, unsigned threads = 0);

/// (max - min) / mean. Throws std::invalid_argument for fewer than two values.
double attractor_spread(std::span<const double> settled_values);

struct AttractorComparison {
  bool passed = false;
  double spread = 0.0;
};

AttractorComparison compare_attractors(std::span<const double> settled_values,
                                       double rel_tolerance);

/// Throws std::invalid_argument when fewer than two runs converged.
AttractorComparison compare_attractors(const SweepReport &report, double rel_tolerance);

} // namespace fiatsim
