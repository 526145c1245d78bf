#pragma once

#include "fiatsim/engine.hpp"
#include "fiatsim/state.hpp"

#include <cstddef>
#include <optional>
#include <string>

namespace fiatsim {

struct InvariantViolation {
  std::size_t iteration = 0;
  /// Short stable name, e.g. "money conservation".
  std::string invariant;
  std::string detail;
};

/// Checks engine invariants step by step: money conservation, non-negative
/// savings, stock bounds, price positivity and reprice factors, and the goods
/// ledger (stock and consumable totals reconcile with production, discards,
/// decay and trades). Feed it every post-step state in order.
class InvariantAuditor {
public:
  explicit InvariantAuditor(const EconomyState &initial);

  /// Returns the first violation found in this step, if any.
  std::optional<InvariantViolation> check(const EconomyState &state, const StepOutcome &outcome);

private:
  EconomyState previous_;
  double initial_money_;
};

} // namespace fiatsim
