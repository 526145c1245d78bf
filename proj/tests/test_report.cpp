#include "fiatsim/report.hpp"
#include "fiatsim/rng.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace fiatsim;

namespace {

std::size_t count(const std::string &text, const std::string &needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

double random_double(RngStream &rng) {
  // Wide dynamic range, including awkward mantissas.
  return std::ldexp(rng.uniform_real() + 0.5, static_cast<int>(rng.uniform_index(80)) - 40);
}

} // namespace

TEST_CASE("format_real round-trips") {
  RngStream rng(1);
  for (int i = 0; i < 10000; ++i) {
    const double x = random_double(rng);
    CHECK(std::stod(format_real(x)) == x);
  }
  CHECK(format_real(0.1) == "0.10000000000000001");
  CHECK(format_real(3000.0) == "3000");
}

TEST_CASE("trajectory csv round-trips at printed precision") {
  RngStream rng(2);
  std::vector<SnapshotRow> rows;
  for (std::size_t i = 1; i <= 200; ++i)
    rows.push_back({i, random_double(rng), random_double(rng), random_double(rng),
                    random_double(rng), random_double(rng), random_double(rng),
                    rng.uniform_index(31), random_double(rng)});
  std::stringstream csv;
  write_trajectory_csv(csv, rows);
  CHECK(csv.str().rfind(std::string(kTrajectoryHeader) + "\n", 0) == 0);
  CHECK(read_trajectory_csv(csv) == rows);
}

TEST_CASE("trades csv round-trips") {
  const std::vector<TradeRecord> trades{{1, 3, 4, 1.05, 1.0}, {2, 0, 29, 0.1, 1.0}};
  std::stringstream csv;
  write_trades_csv(csv, trades);
  CHECK(read_trades_csv(csv) == trades);
}

TEST_CASE("malformed csv is rejected") {
  std::istringstream bad_header("iteration,price\n1,2\n");
  CHECK_THROWS(read_trajectory_csv(bad_header));
  std::istringstream short_row(std::string(kTradesHeader) + "\n1,2,3\n");
  CHECK_THROWS(read_trades_csv(short_row));
}

TEST_CASE("sweep summary csv") {
  SweepReport report;
  SweepRun ok;
  ok.start_price = 0.2;
  ok.seed = 1;
  ok.ok = true;
  ok.convergence = {true, 2.5, 40, 0.01};
  SweepRun failed;
  failed.start_price = 5;
  failed.seed = 2;
  report.runs = {ok, failed};
  std::ostringstream csv;
  write_sweep_summary_csv(csv, report);
  CHECK(csv.str() == std::string(kSweepSummaryHeader) +
                         "\n0.20000000000000001,1,true,2.5,40,0.01\n5,2,false,,,\n");
}

TEST_CASE("line chart has one vertex per value") {
  std::vector<ChartSeries> series{{"a", {1.0, 2.0, 3.0, 2.5}}, {"b <c>", {0.5, 0.6}}};
  const auto svg = render_line_chart(series, ChartOptions{"title & more"});
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(count(svg, "<polyline") == 2);
  const auto first = svg.find("points=\"");
  const auto end = svg.find('"', first + 8);
  CHECK(count(svg.substr(first + 8, end - first - 8), ",") == 4);
  CHECK(svg.find("b &lt;c&gt;") != std::string::npos);
  CHECK(svg.find("title &amp; more") != std::string::npos);

  ChartOptions log;
  log.log_y = true;
  CHECK(count(render_line_chart(series, log), "<polyline") == 2);
}
