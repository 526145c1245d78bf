#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fiatsim {

/// Tunable constants of the economy. Immutable for the duration of a run.
struct MarketParams {
  std::size_t n_agents = 30;
  double initial_savings = 100.0;
  double initial_price = 1.0;
  /// Goods produced per agent per iteration.
  double productivity = 1.0;
  /// Multiplicative daily decay of each agent's consumable inventory.
  double consume_factor = 0.95;
  /// Per-agent capacity of the for-sale store room (10 days of production).
  double max_stock = 10.0;
  std::size_t min_price_change_period = 5;
  /// Reference daily consumption bundle used to value savings in days.
  double typical_goods_per_day = 1.0;
  double goods_utility_scale = 5.0;
  double savings_utility_scale = 10.0;
  std::size_t sellers_sampled = 3;

  friend bool operator==(const MarketParams &, const MarketParams &) = default;
};

struct ParamViolation {
  std::string field;
  std::string message;
};

/// Thrown by operations that require valid parameters.
class ParamError : public std::invalid_argument {
public:
  explicit ParamError(std::vector<ParamViolation> violations);
  const std::vector<ParamViolation> &violations() const noexcept { return violations_; }

private:
  std::vector<ParamViolation> violations_;
};

/// Every violated invariant of `params`; empty when valid.
std::vector<ParamViolation> validate_params(const MarketParams &params);

/// Throws ParamError unless validate_params(params) is empty.
void require_valid(const MarketParams &params);

} // namespace fiatsim
