#include "fiatsim/audit.hpp"

#include "fiatsim/metrics.hpp"
#include "fiatsim/report.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace fiatsim {
namespace {

constexpr double kMoneyRelTolerance = 1e-9;
constexpr double kGoodsRelTolerance = 1e-9;
constexpr std::array<double, 5> kRepriceFactors{1.0, 0.85, 0.95, 1.05, 1.1};

bool close(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

} // namespace

InvariantAuditor::InvariantAuditor(const EconomyState &initial)
    : previous_(initial), initial_money_(total_money(initial)) {}

std::optional<InvariantViolation> InvariantAuditor::check(const EconomyState &state,
                                                          const StepOutcome &outcome) {
  const auto &p = state.params;
  auto fail = [&](std::string name, std::string detail) {
    return InvariantViolation{state.iteration, std::move(name), std::move(detail)};
  };

  const double money = total_money(state);
  if (std::abs(money - initial_money_) > kMoneyRelTolerance * initial_money_)
    return fail("money conservation",
                "total money " + format_real(money) + " != " + format_real(initial_money_));

  if (state.agents.size() != previous_.agents.size())
    return fail("agent identity", "agent count changed");

  double stock_before = 0.0, stock_after = 0.0;
  double consumable_before = 0.0, consumable_after = 0.0;
  for (std::size_t i = 0; i < state.agents.size(); ++i) {
    const auto &a = state.agents[i];
    const auto &prev = previous_.agents[i];
    const auto who = "agent " + std::to_string(a.id);
    if (a.id != i) return fail("agent identity", who + " stored at position " + std::to_string(i));
    if (!(a.savings >= 0)) return fail("non-negative savings", who + " savings " + format_real(a.savings));
    if (!(a.stock_for_sale >= 0 && a.stock_for_sale <= p.max_stock))
      return fail("stock bounds", who + " stock " + format_real(a.stock_for_sale));
    if (!(a.consumable >= 0))
      return fail("non-negative consumable", who + " consumable " + format_real(a.consumable));
    if (!(a.price > 0) || !std::isfinite(a.price))
      return fail("price positivity", who + " price " + format_real(a.price));

    const double ratio = a.price / prev.price;
    bool known = false;
    for (double f : kRepriceFactors) known = known || close(ratio, f, 1e-12);
    if (!known) return fail("reprice factor", who + " price ratio " + format_real(ratio));

    stock_before += prev.stock_for_sale;
    stock_after += a.stock_for_sale;
    consumable_before += prev.consumable;
    consumable_after += a.consumable;
  }

  const double trades = static_cast<double>(outcome.trades.size());
  const double expected_stock = stock_before + p.productivity * static_cast<double>(p.n_agents) -
                                outcome.discarded_production - trades;
  if (!close(stock_after, expected_stock, kGoodsRelTolerance))
    return fail("goods ledger", "stock for sale " + format_real(stock_after) + ", expected " +
                                    format_real(expected_stock));
  const double expected_consumable = consumable_before * p.consume_factor + trades;
  if (!close(consumable_after, expected_consumable, kGoodsRelTolerance))
    return fail("goods ledger", "consumable " + format_real(consumable_after) + ", expected " +
                                    format_real(expected_consumable));

  previous_ = state;
  return std::nullopt;
}

} // namespace fiatsim
