#include "fiatsim/state.hpp"

#include "fiatsim/report.hpp"

#include <sstream>

namespace fiatsim {

EconomyState init_economy(const MarketParams &params) {
  require_valid(params);
  EconomyState state;
  state.params = params;
  state.agents.reserve(params.n_agents);
  for (std::size_t id = 0; id < params.n_agents; ++id) {
    AgentState agent;
    agent.id = id;
    agent.savings = params.initial_savings;
    agent.price = params.initial_price;
    state.agents.push_back(agent);
  }
  return state;
}

std::string serialize_state(const EconomyState &state) {
  std::ostringstream out;
  out << "iteration," << state.iteration << '\n';
  out << "id,savings,stock_for_sale,consumable,price,iterations_since_reprice,"
         "units_sold_since_reprice\n";
  for (const auto &a : state.agents) {
    out << a.id << ',' << format_real(a.savings) << ',' << format_real(a.stock_for_sale) << ','
        << format_real(a.consumable) << ',' << format_real(a.price) << ','
        << a.iterations_since_reprice << ',' << format_real(a.units_sold_since_reprice) << '\n';
  }
  return out.str();
}

} // namespace fiatsim
