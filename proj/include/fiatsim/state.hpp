#pragma once

#include "fiatsim/params.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace fiatsim {

struct AgentState {
  std::size_t id = 0;
  double savings = 0.0;
  /// Produce made, available for sale. Bounded by max_stock.
  double stock_for_sale = 0.0;
  /// Produce purchased, available to be consumed.
  double consumable = 0.0;
  /// Advertised selling price.
  double price = 1.0;
  std::size_t iterations_since_reprice = 0;
  double units_sold_since_reprice = 0.0;

  friend bool operator==(const AgentState &, const AgentState &) = default;
};

struct EconomyState {
  std::size_t iteration = 0;
  std::vector<AgentState> agents;
  MarketParams params;

  friend bool operator==(const EconomyState &, const EconomyState &) = default;
};

/// Builds the iteration-0 economy: uniform endowments, empty inventories and
/// every agent at initial_price. Throws ParamError on invalid params.
EconomyState init_economy(const MarketParams &params);

/// Text dump of every field at full round-trip precision, one agent per line.
std::string serialize_state(const EconomyState &state);

} // namespace fiatsim
