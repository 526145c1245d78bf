#include "fiatsim/config.hpp"
#include "fiatsim/engine.hpp"
#include "fiatsim/experiment.hpp"
#include "fiatsim/metrics.hpp"
#include "fiatsim/params.hpp"
#include "fiatsim/utility.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace fiatsim;

PYBIND11_MODULE(_fiatsim, m) {
  m.doc() = "Agent-based fiat money price discovery simulator";

  py::register_exception<ParamError>(m, "ParamError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  py::class_<MarketParams>(m, "MarketParams")
      .def(py::init<>())
      .def_readwrite("n_agents", &MarketParams::n_agents)
      .def_readwrite("initial_savings", &MarketParams::initial_savings)
      .def_readwrite("initial_price", &MarketParams::initial_price)
      .def_readwrite("productivity", &MarketParams::productivity)
      .def_readwrite("consume_factor", &MarketParams::consume_factor)
      .def_readwrite("max_stock", &MarketParams::max_stock)
      .def_readwrite("min_price_change_period", &MarketParams::min_price_change_period)
      .def_readwrite("typical_goods_per_day", &MarketParams::typical_goods_per_day)
      .def_readwrite("goods_utility_scale", &MarketParams::goods_utility_scale)
      .def_readwrite("savings_utility_scale", &MarketParams::savings_utility_scale)
      .def_readwrite("sellers_sampled", &MarketParams::sellers_sampled)
      .def(py::self == py::self);

  m.def(
      "validate_params",
      [](const MarketParams &p) {
        std::vector<std::pair<std::string, std::string>> out;
        for (auto &v : validate_params(p)) out.emplace_back(v.field, v.message);
        return out;
      },
      "List of (field, message) for every violated invariant.");
  m.def("parse_market_params", [](const std::string &text) { return parse_market_params(text); });

  m.def("diminishing_returns_utility", &diminishing_returns_utility, py::arg("x"),
        py::arg("scale"));
  m.def("utility_from_goods", &utility_from_goods, py::arg("consumable"), py::arg("params"));
  m.def("utility_from_savings", &utility_from_savings, py::arg("savings"),
        py::arg("price_level"), py::arg("params"));
  m.def("wellbeing", &wellbeing, py::arg("consumable"), py::arg("savings"),
        py::arg("price_level"), py::arg("params"));

  py::class_<AgentState>(m, "AgentState")
      .def(py::init<>())
      .def_readwrite("id", &AgentState::id)
      .def_readwrite("savings", &AgentState::savings)
      .def_readwrite("stock_for_sale", &AgentState::stock_for_sale)
      .def_readwrite("consumable", &AgentState::consumable)
      .def_readwrite("price", &AgentState::price)
      .def_readwrite("iterations_since_reprice", &AgentState::iterations_since_reprice)
      .def_readwrite("units_sold_since_reprice", &AgentState::units_sold_since_reprice);

  py::class_<PriceUpdate>(m, "PriceUpdate")
      .def_readonly("price", &PriceUpdate::price)
      .def_readonly("factor", &PriceUpdate::factor)
      .def_readonly("repriced", &PriceUpdate::repriced);
  m.def("update_price", &update_price, py::arg("agent"), py::arg("params"));

  py::class_<SnapshotRow>(m, "SnapshotRow")
      .def_readonly("iteration", &SnapshotRow::iteration)
      .def_readonly("avg_price", &SnapshotRow::avg_price)
      .def_readonly("min_price", &SnapshotRow::min_price)
      .def_readonly("max_price", &SnapshotRow::max_price)
      .def_readonly("total_money", &SnapshotRow::total_money)
      .def_readonly("total_stock_for_sale", &SnapshotRow::total_stock_for_sale)
      .def_readonly("total_consumable", &SnapshotRow::total_consumable)
      .def_readonly("trades_this_iteration", &SnapshotRow::trades_this_iteration)
      .def_readonly("discarded_production", &SnapshotRow::discarded_production);

  py::class_<TradeRecord>(m, "TradeRecord")
      .def_readonly("iteration", &TradeRecord::iteration)
      .def_readonly("buyer_id", &TradeRecord::buyer_id)
      .def_readonly("seller_id", &TradeRecord::seller_id)
      .def_readonly("price_paid", &TradeRecord::price_paid)
      .def_readonly("units", &TradeRecord::units);

  py::class_<RunResult>(m, "RunResult")
      .def_readonly("snapshots", &RunResult::snapshots)
      .def_readonly("trades", &RunResult::trades)
      .def_property_readonly("agents",
                             [](const RunResult &r) { return r.final_state.agents; })
      .def_property_readonly("avg_prices", [](const RunResult &r) {
        std::vector<double> v;
        v.reserve(r.snapshots.size());
        for (const auto &s : r.snapshots) v.push_back(s.avg_price);
        return v;
      });
  m.def(
      "run",
      [](const MarketParams &p, std::uint64_t seed, std::size_t n_iterations) {
        py::gil_scoped_release release;
        return run(p, seed, n_iterations);
      },
      py::arg("params"), py::arg("seed"), py::arg("n_iterations"));

  py::class_<ConvergenceReport>(m, "ConvergenceReport")
      .def_readonly("converged", &ConvergenceReport::converged)
      .def_readonly("settled_value", &ConvergenceReport::settled_value)
      .def_readonly("settle_iteration", &ConvergenceReport::settle_iteration)
      .def_readonly("trailing_cv", &ConvergenceReport::trailing_cv);
  m.def(
      "detect_convergence",
      [](const std::vector<double> &series, std::size_t window, double tolerance) {
        return detect_convergence(series, window, tolerance);
      },
      py::arg("series"), py::arg("window"), py::arg("cv_tolerance"));

  py::class_<SweepSpec>(m, "SweepSpec")
      .def(py::init<>())
      .def_readwrite("base_params", &SweepSpec::base_params)
      .def_readwrite("start_prices", &SweepSpec::start_prices)
      .def_readwrite("seeds", &SweepSpec::seeds)
      .def_readwrite("n_iterations", &SweepSpec::n_iterations)
      .def_readwrite("convergence_window", &SweepSpec::convergence_window)
      .def_readwrite("cv_tolerance", &SweepSpec::cv_tolerance);

  py::class_<SweepRun>(m, "SweepRun")
      .def_readonly("start_price", &SweepRun::start_price)
      .def_readonly("seed", &SweepRun::seed)
      .def_readonly("ok", &SweepRun::ok)
      .def_readonly("error", &SweepRun::error)
      .def_readonly("convergence", &SweepRun::convergence)
      .def_property_readonly("avg_prices", &SweepRun::avg_price_series);

  py::class_<SweepReport>(m, "SweepReport")
      .def_readonly("runs", &SweepReport::runs)
      .def_readonly("all_converged", &SweepReport::all_converged)
      .def_readonly("attractor_spread", &SweepReport::attractor_spread);
  m.def(
      "run_sweep",
      [](const SweepSpec &spec, unsigned threads) {
        py::gil_scoped_release release;
        return run_sweep(spec, threads);
      },
      py::arg("spec"), py::arg("threads") = 0);

  py::class_<AttractorComparison>(m, "AttractorComparison")
      .def_readonly("passed", &AttractorComparison::passed)
      .def_readonly("spread", &AttractorComparison::spread);
  m.def(
      "compare_attractors",
      [](const SweepReport &r, double tol) { return compare_attractors(r, tol); },
      py::arg("report"), py::arg("rel_tolerance"));
  m.def(
      "compare_settled_values",
      [](const std::vector<double> &values, double tol) { return compare_attractors(values, tol); },
      py::arg("settled_values"), py::arg("rel_tolerance"));
}
