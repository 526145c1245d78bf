#include "fiatsim/utility.hpp"

#include <cmath>
#include <stdexcept>

namespace fiatsim {

double diminishing_returns_utility(double x, double scale) {
  if (!(x >= 0)) throw std::domain_error("diminishing_returns_utility: quantity must be >= 0");
  if (!(scale > 0)) throw std::domain_error("diminishing_returns_utility: scale must be > 0");
  // -expm1 keeps precision for small x.
  return -std::expm1(-x / scale);
}

double utility_from_goods(double consumable, const MarketParams &params) {
  return diminishing_returns_utility(consumable, params.goods_utility_scale);
}

double utility_from_savings(double savings, double price_level, const MarketParams &params) {
  if (!(price_level > 0)) throw std::domain_error("utility_from_savings: price level must be > 0");
  const double cost_of_one_day = price_level * params.typical_goods_per_day;
  return diminishing_returns_utility(savings / cost_of_one_day, params.savings_utility_scale);
}

double wellbeing(double consumable, double savings, double price_level,
                 const MarketParams &params) {
  return utility_from_goods(consumable, params) *
         utility_from_savings(savings, price_level, params);
}

} // namespace fiatsim
