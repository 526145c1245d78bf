#pragma once

#include "fiatsim/experiment.hpp"
#include "fiatsim/params.hpp"

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace fiatsim {

// Flat `key = value` documents. Blank lines and `#` comments are ignored;
// list values are comma separated. Unknown and duplicate keys are errors.
// When typical_goods_per_day is absent it follows productivity.

class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Everything a CLI invocation needs: market parameters plus run/sweep settings.
struct RunConfig {
  MarketParams params;
  std::vector<double> start_prices{0.2, 1.0, 5.0, 25.0};
  std::vector<std::uint64_t> seeds{1, 2, 3};
  std::size_t n_iterations = 5000;
  std::size_t convergence_window = 500;
  double convergence_cv_tolerance = 0.02;
  double attractor_rel_tolerance = 0.10;

  SweepSpec sweep_spec() const;
};

/// Accepts only MarketParams keys.
MarketParams parse_market_params(std::string_view text);

/// Accepts MarketParams keys plus the run/sweep keys.
RunConfig parse_run_config(std::string_view text);

/// Throws ConfigError naming the path when it cannot be read.
RunConfig load_run_config(const std::filesystem::path &path);

} // namespace fiatsim
