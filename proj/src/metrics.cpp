#include "fiatsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fiatsim {

double average_selling_price(const EconomyState &state) {
  if (state.agents.empty()) throw std::invalid_argument("average_selling_price: no agents");
  double sum = 0.0;
  for (const auto &a : state.agents) sum += a.price;
  return sum / static_cast<double>(state.agents.size());
}

double total_money(const EconomyState &state) {
  double sum = 0.0;
  for (const auto &a : state.agents) sum += a.savings;
  return sum;
}

SnapshotRow record_snapshot(const EconomyState &state, std::size_t trades, double discarded) {
  SnapshotRow row;
  row.iteration = state.iteration;
  row.avg_price = average_selling_price(state);
  row.min_price = std::numeric_limits<double>::infinity();
  row.max_price = -std::numeric_limits<double>::infinity();
  for (const auto &a : state.agents) {
    row.min_price = std::min(row.min_price, a.price);
    row.max_price = std::max(row.max_price, a.price);
    row.total_stock_for_sale += a.stock_for_sale;
    row.total_consumable += a.consumable;
  }
  row.total_money = total_money(state);
  row.trades_this_iteration = trades;
  row.discarded_production = discarded;
  return row;
}

double coefficient_of_variation(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("coefficient_of_variation: empty input");
  const double n = static_cast<double>(values.size());
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= n;
  if (!(mean > 0)) return std::numeric_limits<double>::infinity();
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / n) / mean;
}

ConvergenceReport detect_convergence(std::span<const double> series, std::size_t window,
                                     double cv_tolerance) {
  if (window < 2) throw std::invalid_argument("detect_convergence: window must be >= 2");
  if (series.size() < window)
    throw std::invalid_argument("detect_convergence: series shorter than window");

  ConvergenceReport report;
  const std::size_t last_start = series.size() - window;
  const auto trailing = series.subspan(last_start, window);
  report.trailing_cv = coefficient_of_variation(trailing);
  report.converged = report.trailing_cv < cv_tolerance;

  double mean = 0.0;
  for (double v : trailing) mean += v;
  report.settled_value = mean / static_cast<double>(window);

  // Walk backwards until a window fails the tolerance.
  report.settle_iteration = series.size();
  for (std::size_t start = last_start + 1; start-- > 0;) {
    if (!(coefficient_of_variation(series.subspan(start, window)) < cv_tolerance)) break;
    report.settle_iteration = start;
  }
  return report;
}

} // namespace fiatsim
