#pragma once

#include "fiatsim/engine.hpp"
#include "fiatsim/experiment.hpp"
#include "fiatsim/metrics.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace fiatsim {

/// Round-trip formatting with 17 significant digits.
std::string format_real(double value);

inline constexpr const char *kTrajectoryHeader =
    "iteration,avg_price,min_price,max_price,total_money,total_stock_for_sale,"
    "total_consumable,trades,discarded_production";
inline constexpr const char *kTradesHeader = "iteration,buyer_id,seller_id,price_paid,units";
inline constexpr const char *kSweepSummaryHeader =
    "start_price,seed,converged,settled_value,settle_iteration,trailing_cv";

void write_trajectory_csv(std::ostream &out, std::span<const SnapshotRow> rows);
/// Throws std::runtime_error on a malformed header or row.
std::vector<SnapshotRow> read_trajectory_csv(std::istream &in);

void write_trades_csv(std::ostream &out, std::span<const TradeRecord> trades);
std::vector<TradeRecord> read_trades_csv(std::istream &in);

/// One row per run. Failed runs print converged=false and empty numeric cells.
void write_sweep_summary_csv(std::ostream &out, const SweepReport &report);

struct ChartSeries {
  std::string label;
  std::vector<double> values;
};

struct ChartOptions {
  std::string title;
  std::string y_label = "average selling price";
  bool log_y = false;
  int width = 900;
  int height = 540;
};

/// Static SVG line chart. Each series becomes one <polyline> with one vertex
/// per value, x = value index + 1 (the iteration number).
std::string render_line_chart(std::span<const ChartSeries> series, const ChartOptions &options);

} // namespace fiatsim
