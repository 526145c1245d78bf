#include "fiatsim/params.hpp"

#include <cmath>
#include <sstream>

namespace fiatsim {
namespace {

std::string join_messages(const std::vector<ParamViolation> &violations) {
  std::ostringstream out;
  out << "invalid market parameters:";
  for (const auto &v : violations) out << "\n  " << v.field << ": " << v.message;
  return out.str();
}

} // namespace

ParamError::ParamError(std::vector<ParamViolation> violations)
    : std::invalid_argument(join_messages(violations)), violations_(std::move(violations)) {}

std::vector<ParamViolation> validate_params(const MarketParams &p) {
  std::vector<ParamViolation> out;
  auto check = [&out](bool ok, const char *field, const char *message) {
    if (!ok) out.push_back({field, message});
  };
  auto finite = [](double x) { return std::isfinite(x); };

  check(p.n_agents >= 2, "n_agents",
        "at least two agents are required (agents never consume their own produce)");
  check(finite(p.initial_savings) && p.initial_savings >= 0, "initial_savings", "must be >= 0");
  check(finite(p.initial_price) && p.initial_price > 0, "initial_price", "must be > 0");
  check(finite(p.productivity) && p.productivity > 0, "productivity", "must be > 0");
  check(p.consume_factor > 0 && p.consume_factor < 1, "consume_factor",
        "must lie strictly between 0 and 1");
  check(finite(p.max_stock) && p.max_stock > p.productivity, "max_stock",
        "must exceed productivity");
  check(p.min_price_change_period >= 1, "min_price_change_period", "must be >= 1");
  check(finite(p.goods_utility_scale) && p.goods_utility_scale > 0, "goods_utility_scale",
        "must be > 0");
  check(finite(p.savings_utility_scale) && p.savings_utility_scale > 0, "savings_utility_scale",
        "must be > 0");
  check(finite(p.typical_goods_per_day) && p.typical_goods_per_day > 0, "typical_goods_per_day",
        "must be > 0");
  // The upper bound is only meaningful once the agent count itself is valid.
  check(p.sellers_sampled >= 1 && (p.n_agents < 2 || p.sellers_sampled + 1 <= p.n_agents),
        "sellers_sampled",
        "must lie in [1, n_agents - 1]");
  return out;
}

void require_valid(const MarketParams &params) {
  auto violations = validate_params(params);
  if (!violations.empty()) throw ParamError(std::move(violations));
}

} // namespace fiatsim
