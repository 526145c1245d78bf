#include "fiatsim/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace fiatsim {
namespace {

SweepRun execute(const SweepSpec &spec, double start_price, std::uint64_t seed) {
  SweepRun out;
  out.start_price = start_price;
  out.seed = seed;
  try {
    auto params = spec.base_params;
    params.initial_price = start_price;
    auto result = run(params, seed, spec.n_iterations);
    out.snapshots = std::move(result.snapshots);
    out.convergence =
        detect_convergence(out.avg_price_series(), spec.convergence_window, spec.cv_tolerance);
    out.ok = true;
  } catch (const std::exception &e) {
    out.ok = false;
    out.error = e.what();
    out.snapshots.clear();
  }
  return out;
}

std::vector<double> converged_values(const SweepReport &report) {
  std::vector<double> values;
  for (const auto &r : report.runs)
    if (r.ok && r.convergence.converged) values.push_back(r.convergence.settled_value);
  return values;
}

} // namespace

std::vector<double> SweepRun::avg_price_series() const {
  std::vector<double> series;
  series.reserve(snapshots.size());
  for (const auto &row : snapshots) series.push_back(row.avg_price);
  return series;
}

std::vector<std::string> validate_sweep_spec(const SweepSpec &spec) {
  std::vector<std::string> problems;
  if (spec.start_prices.empty()) problems.emplace_back("start_prices must not be empty");
  if (spec.seeds.empty()) problems.emplace_back("seeds must not be empty");
  for (double p : spec.start_prices)
    if (!(p > 0) || !std::isfinite(p)) {
      std::ostringstream msg;
      msg << "start price " << p << " must be a positive finite value";
      problems.push_back(msg.str());
    }
  if (spec.n_iterations == 0) problems.emplace_back("n_iterations must be >= 1");
  if (spec.convergence_window < 2) problems.emplace_back("convergence_window must be >= 2");
  if (spec.convergence_window > spec.n_iterations)
    problems.emplace_back("convergence_window must not exceed n_iterations");
  return problems;
}

SweepReport run_sweep(const SweepSpec &spec, unsigned threads) {
  if (auto problems = validate_sweep_spec(spec); !problems.empty()) {
    std::string msg = "invalid sweep spec:";
    for (const auto &p : problems) msg += "\n  " + p;
    throw std::invalid_argument(msg);
  }

  const std::size_t n_runs = spec.start_prices.size() * spec.seeds.size();
  SweepReport report;
  report.runs.resize(n_runs);

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n_runs));

  // Each worker claims run indices; every run writes only its own slot.
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n_runs; i = next++) {
      const double price = spec.start_prices[i / spec.seeds.size()];
      const std::uint64_t seed = spec.seeds[i % spec.seeds.size()];
      report.runs[i] = execute(spec, price, seed);
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  report.all_converged = std::all_of(report.runs.begin(), report.runs.end(), [](const auto &r) {
    return r.ok && r.convergence.converged;
  });
  if (auto values = converged_values(report); values.size() >= 2)
    report.attractor_spread = attractor_spread(values);
  return report;
}

double attractor_spread(std::span<const double> settled_values) {
  if (settled_values.size() < 2)
    throw std::invalid_argument("attractor_spread: at least two settled values required");
  const auto [lo, hi] = std::minmax_element(settled_values.begin(), settled_values.end());
  double mean = 0.0;
  for (double v : settled_values) mean += v;
  mean /= static_cast<double>(settled_values.size());
  return (*hi - *lo) / mean;
}

AttractorComparison compare_attractors(std::span<const double> settled_values,
                                       double rel_tolerance) {
  const double spread = attractor_spread(settled_values);
  return {spread < rel_tolerance, spread};
}

AttractorComparison compare_attractors(const SweepReport &report, double rel_tolerance) {
  const auto values = converged_values(report);
  if (values.size() < 2)
    throw std::invalid_argument("compare_attractors: fewer than two runs converged");
  return compare_attractors(values, rel_tolerance);
}

} // namespace fiatsim
