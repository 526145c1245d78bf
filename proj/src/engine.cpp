#include "fiatsim/engine.hpp"

#include "fiatsim/utility.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace fiatsim {

double step_produce(EconomyState &state) {
  const auto &p = state.params;
  double discarded = 0.0;
  for (auto &a : state.agents) {
    const double produced = a.stock_for_sale + p.productivity;
    if (produced > p.max_stock) {
      discarded += produced - p.max_stock;
      a.stock_for_sale = p.max_stock;
    } else {
      a.stock_for_sale = produced;
    }
  }
  return discarded;
}

void step_consume(EconomyState &state) {
  for (auto &a : state.agents) a.consumable *= state.params.consume_factor;
}

std::vector<std::size_t> sample_sellers(const EconomyState &state, std::size_t buyer_id,
                                        RngStream &rng) {
  std::vector<std::size_t> eligible;
  eligible.reserve(state.agents.size());
  for (const auto &a : state.agents)
    if (a.id != buyer_id && a.stock_for_sale >= 1.0) eligible.push_back(a.id);

  // Partial Fisher-Yates: the first k slots become a uniform k-subset.
  const std::size_t k = std::min(state.params.sellers_sampled, eligible.size());
  for (std::size_t i = 0; i < k; ++i)
    std::swap(eligible[i], eligible[i + rng.uniform_index(eligible.size() - i)]);
  eligible.resize(k);
  return eligible;
}

std::vector<TradeRecord> step_purchase(EconomyState &state, RngStream &rng) {
  const auto &p = state.params;
  const double price_level = average_selling_price(state);
  const std::size_t iteration = state.iteration + 1;

  std::vector<std::size_t> order(state.agents.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  rng.shuffle(std::span<std::size_t>(order));

  std::vector<TradeRecord> trades;
  for (std::size_t buyer_id : order) {
    const auto sellers = sample_sellers(state, buyer_id, rng);
    if (sellers.empty()) continue;

    std::size_t seller_id = sellers.front();
    for (std::size_t id : sellers) {
      const double candidate = state.agents[id].price;
      const double best = state.agents[seller_id].price;
      if (candidate < best || (candidate == best && id < seller_id)) seller_id = id;
    }

    auto &buyer = state.agents[buyer_id];
    auto &seller = state.agents[seller_id];
    const double price = seller.price;
    if (!(buyer.savings >= price)) continue;
    const double savings_after = buyer.savings - price;
    if (savings_after < 0) continue;

    const double now = wellbeing(buyer.consumable, buyer.savings, price_level, p);
    const double after = wellbeing(buyer.consumable + 1.0, savings_after, price_level, p);
    if (!(after > now)) continue;

    buyer.savings = savings_after;
    buyer.consumable += 1.0;
#ifdef FIATSIM_FAULT_DROP_SELLER_CREDIT
    // Test-only corruption used to exercise the invariant audit.
    if (!(iteration == 10 && trades.empty())) seller.savings += price;
#else
    seller.savings += price;
#endif
    seller.stock_for_sale -= 1.0;
    seller.units_sold_since_reprice += 1.0;
    trades.push_back({iteration, buyer_id, seller_id, price, 1.0});
  }
  return trades;
}

PriceUpdate update_price(const AgentState &agent, const MarketParams &params) {
  PriceUpdate update{agent.price, 1.0, false};
  if (agent.iterations_since_reprice <= params.min_price_change_period) return update;

  const double sales_per_day =
      agent.units_sold_since_reprice / static_cast<double>(agent.iterations_since_reprice);
  const double stock_growth_per_day = params.productivity - sales_per_day;

  double factor = 1.0;
  if (stock_growth_per_day > 0) {
    // Store room filling up.
    const double days_till_full = (params.max_stock - agent.stock_for_sale) / stock_growth_per_day;
    if (days_till_full < 3)
      factor = 0.85;
    else if (days_till_full < 15)
      factor = 0.95;
    else if (days_till_full > 90)
      factor = 1.05;
  } else {
    // Store room emptying (or static).
    const double days_till_empty = stock_growth_per_day < 0
                                       ? agent.stock_for_sale / -stock_growth_per_day
                                       : std::numeric_limits<double>::infinity();
    if (days_till_empty < 3)
      factor = 1.1;
    else if (agent.stock_for_sale < params.max_stock / 2)
      factor = 1.05;
  }

  if (factor != 1.0) update = {agent.price * factor, factor, true};
  return update;
}

void step_modify_prices(EconomyState &state) {
  for (auto &a : state.agents) {
    const auto update = update_price(a, state.params);
    if (update.repriced) {
      a.price = update.price;
      a.iterations_since_reprice = 0;
      a.units_sold_since_reprice = 0.0;
    } else {
      ++a.iterations_since_reprice;
    }
  }
}

StepOutcome step(EconomyState &state, RngStream &rng) {
  StepOutcome outcome;
  outcome.discarded_production = step_produce(state);
  step_consume(state);
  outcome.price_level = average_selling_price(state);
  outcome.trades = step_purchase(state, rng);
  step_modify_prices(state);
  ++state.iteration;
  return outcome;
}

RunResult run(const MarketParams &params, std::uint64_t seed, std::size_t n_iterations,
              const StepObserver &observer) {
  if (n_iterations == 0) throw std::invalid_argument("run: n_iterations must be >= 1");
  RunResult result;
  result.final_state = init_economy(params);
  RngStream rng(seed);
  result.snapshots.reserve(n_iterations);
  for (std::size_t i = 0; i < n_iterations; ++i) {
    auto outcome = step(result.final_state, rng);
    const auto &row = result.snapshots.emplace_back(record_snapshot(
        result.final_state, outcome.trades.size(), outcome.discarded_production));
    if (observer) observer(result.final_state, outcome, row);
    result.trades.insert(result.trades.end(), outcome.trades.begin(), outcome.trades.end());
  }
  return result;
}

} // namespace fiatsim
