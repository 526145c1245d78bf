#pragma once

#include "fiatsim/state.hpp"

#include <cstddef>
#include <span>

namespace fiatsim {

/// Per-iteration aggregates, recorded after each full step.
struct SnapshotRow {
  std::size_t iteration = 0;
  double avg_price = 0.0;
  double min_price = 0.0;
  double max_price = 0.0;
  double total_money = 0.0;
  double total_stock_for_sale = 0.0;
  double total_consumable = 0.0;
  std::size_t trades_this_iteration = 0;
  double discarded_production = 0.0;

  friend bool operator==(const SnapshotRow &, const SnapshotRow &) = default;
};

struct ConvergenceReport {
  bool converged = false;
  /// Mean of the final window; meaningful only when converged.
  double settled_value = 0.0;
  /// Start index of the first window from which every later window is
  /// within tolerance. Equals the series length when the final window fails.
  std::size_t settle_iteration = 0;
  /// Coefficient of variation of the final window.
  double trailing_cv = 0.0;
};

/// Unweighted mean of every agent's advertised price. This is the price level
/// agents use to value their savings.
double average_selling_price(const EconomyState &state);

double total_money(const EconomyState &state);

SnapshotRow record_snapshot(const EconomyState &state, std::size_t trades, double discarded);

/// Population standard deviation over mean. +inf for a non-positive mean.
double coefficient_of_variation(std::span<const double> values);

/// Throws std::invalid_argument if window < 2 or the series is shorter than
/// the window.
ConvergenceReport detect_convergence(std::span<const double> series, std::size_t window,
                                     double cv_tolerance);

} // namespace fiatsim
