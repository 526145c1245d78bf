#pragma once

#include "fiatsim/params.hpp"

namespace fiatsim {

// Wellbeing is the product of a goods curve and a savings curve. Savings are
// valued in days of consumption at the prevailing price level, so wellbeing
// is unchanged when savings and price level scale together.
//
// All functions are pure and throw std::domain_error on out-of-domain input.

/// u(x) = 1 - exp(-x / scale). Zero at zero, increasing, concave, below 1.
double diminishing_returns_utility(double x, double scale);

double utility_from_goods(double consumable, const MarketParams &params);

/// Utility of `savings` measured as days of typical consumption at `price_level`.
double utility_from_savings(double savings, double price_level, const MarketParams &params);

double wellbeing(double consumable, double savings, double price_level,
                 const MarketParams &params);

} // namespace fiatsim
