#pragma once

#include "fiatsim/metrics.hpp"
#include "fiatsim/rng.hpp"
#include "fiatsim/state.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace fiatsim {

struct TradeRecord {
  /// 1-based number of the iteration in which the trade happened.
  std::size_t iteration = 0;
  std::size_t buyer_id = 0;
  std::size_t seller_id = 0;
  double price_paid = 0.0;
  double units = 1.0;

  friend bool operator==(const TradeRecord &, const TradeRecord &) = default;
};

struct PriceUpdate {
  double price = 0.0;
  /// Multiplier applied to the old price; 1.0 when unchanged.
  double factor = 1.0;
  bool repriced = false;
};

struct StepOutcome {
  std::vector<TradeRecord> trades;
  double discarded_production = 0.0;
  /// Price level held fixed during the purchase phase.
  double price_level = 0.0;
};

// The four phases of one iteration, in order: produce, consume, purchase,
// modify prices.

/// Adds productivity to every store room, clamped at max_stock. Returns the
/// total production discarded for lack of space.
double step_produce(EconomyState &state);

void step_consume(EconomyState &state);

/// Up to sellers_sampled distinct agents other than `buyer_id` holding at
/// least one unit for sale, drawn uniformly without replacement.
std::vector<std::size_t> sample_sellers(const EconomyState &state, std::size_t buyer_id,
                                        RngStream &rng);

/// Every agent, in a fresh random order, considers buying one unit from the
/// cheapest of its sampled sellers and buys iff it can afford it and its
/// wellbeing strictly improves at the phase-start price level.
std::vector<TradeRecord> step_purchase(EconomyState &state, RngStream &rng);

/// Stock-driven repricing policy for one agent. Does not mutate the agent.
PriceUpdate update_price(const AgentState &agent, const MarketParams &params);

void step_modify_prices(EconomyState &state);

StepOutcome step(EconomyState &state, RngStream &rng);

struct RunResult {
  EconomyState final_state;
  std::vector<SnapshotRow> snapshots;
  std::vector<TradeRecord> trades;
};

/// Called after every step with the post-step state.
using StepObserver =
    std::function<void(const EconomyState &, const StepOutcome &, const SnapshotRow &)>;

/// Deterministic run: a pure function of (params, seed, n_iterations).
/// Throws ParamError on invalid params and std::invalid_argument when
/// n_iterations is zero.
RunResult run(const MarketParams &params, std::uint64_t seed, std::size_t n_iterations,
              const StepObserver &observer = {});

} // namespace fiatsim
