#include "fiatsim/cli.hpp"

#include "fiatsim/audit.hpp"
#include "fiatsim/config.hpp"
#include "fiatsim/engine.hpp"
#include "fiatsim/experiment.hpp"
#include "fiatsim/report.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <system_error>

namespace fiatsim::cli {
namespace {

namespace fs = std::filesystem;

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

RunConfig resolve(const CliConfig &cli) {
  RunConfig config = cli.config_path ? load_run_config(*cli.config_path) : RunConfig{};
  if (cli.seed) config.seeds = {*cli.seed};
  if (cli.iterations) config.n_iterations = *cli.iterations;
  if (config.seeds.empty()) throw ConfigError("seeds must not be empty");
  if (config.n_iterations == 0) throw ConfigError("n_iterations must be >= 1");
  require_valid(config.params);
  return config;
}

void prepare_dir(const fs::path &dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory '" + dir.string() + "': " + ec.message());
}

void refuse_overwrite(const fs::path &path, bool force) {
  if (!force && fs::exists(path))
    throw IoError("refusing to overwrite '" + path.string() + "' (pass --force)");
}

void write_file(const fs::path &path, const std::string &contents) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  file << contents;
  file.close();
  if (!file) throw IoError("failed to write '" + path.string() + "'");
}

std::string trajectory_text(std::span<const SnapshotRow> rows) {
  std::ostringstream s;
  write_trajectory_csv(s, rows);
  return s.str();
}

std::string trades_text(std::span<const TradeRecord> trades) {
  std::ostringstream s;
  write_trades_csv(s, trades);
  return s.str();
}

std::vector<double> price_series(std::span<const SnapshotRow> rows) {
  std::vector<double> v;
  v.reserve(rows.size());
  for (const auto &r : rows) v.push_back(r.avg_price);
  return v;
}

void print_convergence(std::ostream &out, const ConvergenceReport &c, std::size_t window,
                       double tolerance) {
  out << "converged: " << (c.converged ? "yes" : "no") << " (trailing cv "
      << format_real(c.trailing_cv) << " over " << window << " iterations, tolerance "
      << tolerance << ")\n";
  out << "settled value: " << format_real(c.settled_value) << '\n';
  out << "settle index: " << c.settle_iteration << '\n';
}

std::string price_label(double price) {
  std::ostringstream s;
  s << price;
  return s.str();
}

/// Maps the shared error types onto exit codes.
template <typename F> int guarded(std::ostream &err, F body) {
  try {
    return body();
  } catch (const ConfigError &e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const ParamError &e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const IoError &e) {
    err << "i/o error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::invalid_argument &e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  }
}

} // namespace

int cmd_run(const CliConfig &cli, std::ostream &out, std::ostream &err) {
  return guarded(err, [&] {
    const auto config = resolve(cli);
    const auto trajectory_path = cli.out_dir / "trajectory.csv";
    const auto trades_path = cli.out_dir / "trades.csv";
    const auto svg_path = cli.out_dir / "price.svg";
    prepare_dir(cli.out_dir);
    refuse_overwrite(trajectory_path, cli.force);
    refuse_overwrite(trades_path, cli.force);
    if (cli.svg) refuse_overwrite(svg_path, cli.force);

    const auto seed = config.seeds.front();
    const auto result = run(config.params, seed, config.n_iterations);
    write_file(trajectory_path, trajectory_text(result.snapshots));
    write_file(trades_path, trades_text(result.trades));

    const auto series = price_series(result.snapshots);
    if (cli.svg) {
      std::vector<ChartSeries> chart{{"start " + price_label(config.params.initial_price),
                                      series}};
      ChartOptions options;
      options.title = "Average selling price, seed " + std::to_string(seed);
      write_file(svg_path, render_line_chart(chart, options));
    }

    out << "run: seed " << seed << ", " << config.n_iterations << " iterations, "
        << result.trades.size() << " trades\n";
    out << "final average price: " << format_real(series.back()) << '\n';
    if (series.size() >= config.convergence_window && config.convergence_window >= 2)
      print_convergence(out,
                        detect_convergence(series, config.convergence_window,
                                           config.convergence_cv_tolerance),
                        config.convergence_window, config.convergence_cv_tolerance);
    else
      out << "converged: n/a (run shorter than convergence window)\n";
    return static_cast<int>(kOk);
  });
}

int cmd_sweep(const CliConfig &cli, std::ostream &out, std::ostream &err) {
  return guarded(err, [&] {
    const auto config = resolve(cli);
    const auto spec = config.sweep_spec();
    if (auto problems = validate_sweep_spec(spec); !problems.empty())
      throw ConfigError(problems.front());

    const auto summary_path = cli.out_dir / "summary.csv";
    const auto runs_dir = cli.out_dir / "runs";
    const auto svg_path = cli.out_dir / "sweep.svg";
    auto run_path = [&](const SweepRun &r) {
      return runs_dir / ("trajectory_p" + price_label(r.start_price) + "_s" +
                         std::to_string(r.seed) + ".csv");
    };
    prepare_dir(runs_dir);
    refuse_overwrite(summary_path, cli.force);
    if (cli.svg) refuse_overwrite(svg_path, cli.force);

    const auto report = run_sweep(spec, cli.threads);
    for (const auto &r : report.runs) refuse_overwrite(run_path(r), cli.force);

    std::ostringstream summary;
    write_sweep_summary_csv(summary, report);
    write_file(summary_path, summary.str());
    for (const auto &r : report.runs)
      if (r.ok) write_file(run_path(r), trajectory_text(r.snapshots));

    if (cli.svg) {
      // One curve per start price, from that price's first seed.
      std::vector<ChartSeries> chart;
      for (std::size_t i = 0; i < report.runs.size(); i += spec.seeds.size()) {
        const auto &r = report.runs[i];
        chart.push_back({"start " + price_label(r.start_price), r.avg_price_series()});
      }
      ChartOptions options;
      options.title = "Average selling price by starting price, seed " +
                      std::to_string(spec.seeds.front());
      options.log_y = true;
      write_file(svg_path, render_line_chart(chart, options));
    }

    for (const auto &r : report.runs) {
      out << "start " << price_label(r.start_price) << " seed " << r.seed << ": ";
      if (!r.ok)
        out << "FAILED (" << r.error << ")\n";
      else
        out << (r.convergence.converged ? "converged" : "not converged") << ", settled "
            << format_real(r.convergence.settled_value) << ", cv "
            << format_real(r.convergence.trailing_cv) << '\n';
    }
    out << "all converged: " << (report.all_converged ? "yes" : "no") << '\n';
    if (!report.attractor_spread) {
      out << "attractor comparison: FAIL (fewer than two runs converged)\n";
      return static_cast<int>(kAttractorFailed);
    }
    const auto cmp = compare_attractors(report, config.attractor_rel_tolerance);
    out << "attractor spread: " << format_real(cmp.spread) << " (tolerance "
        << config.attractor_rel_tolerance << ") " << (cmp.passed ? "PASS" : "FAIL") << '\n';
    return static_cast<int>(cmp.passed ? kOk : kAttractorFailed);
  });
}

int cmd_verify(const CliConfig &cli, std::ostream &out, std::ostream &err) {
  return guarded(err, [&] {
    const auto config = resolve(cli);
    const auto seed = config.seeds.front();

    std::optional<InvariantViolation> violation;
    auto audited_run = [&] {
      InvariantAuditor auditor(init_economy(config.params));
      return run(config.params, seed, config.n_iterations,
                 [&](const EconomyState &state, const StepOutcome &outcome, const SnapshotRow &) {
                   if (violation) return;
                   violation = auditor.check(state, outcome);
                 });
    };

    const auto first = audited_run();
    if (violation) {
      err << "invariant violated at iteration " << violation->iteration << ": "
          << violation->invariant << " (" << violation->detail << ")\n";
      return static_cast<int>(kInvariantViolated);
    }
    const auto second = audited_run();
    if (violation) {
      err << "invariant violated on replay at iteration " << violation->iteration << ": "
          << violation->invariant << " (" << violation->detail << ")\n";
      return static_cast<int>(kInvariantViolated);
    }
    if (trajectory_text(first.snapshots) != trajectory_text(second.snapshots) ||
        trades_text(first.trades) != trades_text(second.trades)) {
      std::size_t i = 0;
      while (i < first.snapshots.size() && first.snapshots[i] == second.snapshots[i]) ++i;
      err << "invariant violated at iteration " << i + 1
          << ": determinism (replay output differs)\n";
      return static_cast<int>(kInvariantViolated);
    }
    out << "verify: " << config.n_iterations << " iterations, seed " << seed
        << ": all invariants hold; replay identical\n";
    return static_cast<int>(kOk);
  });
}

} // namespace fiatsim::cli
