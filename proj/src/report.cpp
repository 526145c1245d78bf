#include "fiatsim/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace fiatsim {
namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> cells;
  while (true) {
    const auto comma = line.find(',');
    cells.push_back(line.substr(0, comma));
    if (comma == std::string_view::npos) return cells;
    line.remove_prefix(comma + 1);
  }
}

template <typename T> T parse_cell(std::string_view cell, std::size_t line_no) {
  T value{};
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc{} || ptr != cell.data() + cell.size() || cell.empty())
    throw std::runtime_error("csv line " + std::to_string(line_no) + ": bad cell '" +
                             std::string(cell) + "'");
  return value;
}

/// Reads the header, then hands each data row's cells to `on_row`.
template <typename F>
void read_csv(std::istream &in, std::string_view header, std::size_t columns, F on_row) {
  std::string line;
  if (!std::getline(in, line) || line != header)
    throw std::runtime_error("csv: unexpected header '" + line + "'");
  for (std::size_t line_no = 2; std::getline(in, line); ++line_no) {
    if (line.empty()) continue;
    const auto cells = split(line);
    if (cells.size() != columns)
      throw std::runtime_error("csv line " + std::to_string(line_no) + ": expected " +
                               std::to_string(columns) + " cells");
    on_row(cells, line_no);
  }
}

const char *kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                          "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string svg_escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
    case '&': out += "&amp;"; break;
    case '<': out += "&lt;"; break;
    case '>': out += "&gt;"; break;
    case '"': out += "&quot;"; break;
    default: out += c;
    }
  }
  return out;
}

std::string fixed(double v, int digits = 2) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(digits);
  s << v;
  return s.str();
}

std::string tick_label(double v) {
  std::ostringstream s;
  s.precision(3);
  s << v;
  return s.str();
}

} // namespace

std::string format_real(double value) {
  char buffer[64];
  const auto [ptr, ec] =
      std::to_chars(buffer, buffer + sizeof buffer, value, std::chars_format::general, 17);
  return std::string(buffer, ptr);
}

void write_trajectory_csv(std::ostream &out, std::span<const SnapshotRow> rows) {
  out << kTrajectoryHeader << '\n';
  for (const auto &r : rows) {
    out << r.iteration << ',' << format_real(r.avg_price) << ',' << format_real(r.min_price) << ','
        << format_real(r.max_price) << ',' << format_real(r.total_money) << ','
        << format_real(r.total_stock_for_sale) << ',' << format_real(r.total_consumable) << ','
        << r.trades_this_iteration << ',' << format_real(r.discarded_production) << '\n';
  }
}

std::vector<SnapshotRow> read_trajectory_csv(std::istream &in) {
  std::vector<SnapshotRow> rows;
  read_csv(in, kTrajectoryHeader, 9, [&](const auto &c, std::size_t n) {
    rows.push_back({parse_cell<std::size_t>(c[0], n), parse_cell<double>(c[1], n),
                    parse_cell<double>(c[2], n), parse_cell<double>(c[3], n),
                    parse_cell<double>(c[4], n), parse_cell<double>(c[5], n),
                    parse_cell<double>(c[6], n), parse_cell<std::size_t>(c[7], n),
                    parse_cell<double>(c[8], n)});
  });
  return rows;
}

void write_trades_csv(std::ostream &out, std::span<const TradeRecord> trades) {
  out << kTradesHeader << '\n';
  for (const auto &t : trades)
    out << t.iteration << ',' << t.buyer_id << ',' << t.seller_id << ','
        << format_real(t.price_paid) << ',' << format_real(t.units) << '\n';
}

std::vector<TradeRecord> read_trades_csv(std::istream &in) {
  std::vector<TradeRecord> trades;
  read_csv(in, kTradesHeader, 5, [&](const auto &c, std::size_t n) {
    trades.push_back({parse_cell<std::size_t>(c[0], n), parse_cell<std::size_t>(c[1], n),
                      parse_cell<std::size_t>(c[2], n), parse_cell<double>(c[3], n),
                      parse_cell<double>(c[4], n)});
  });
  return trades;
}

void write_sweep_summary_csv(std::ostream &out, const SweepReport &report) {
  out << kSweepSummaryHeader << '\n';
  for (const auto &r : report.runs) {
    out << format_real(r.start_price) << ',' << r.seed << ','
        << (r.ok && r.convergence.converged ? "true" : "false") << ',';
    if (r.ok)
      out << format_real(r.convergence.settled_value) << ',' << r.convergence.settle_iteration
          << ',' << format_real(r.convergence.trailing_cv);
    else
      out << ",,";
    out << '\n';
  }
}

std::string render_line_chart(std::span<const ChartSeries> series, const ChartOptions &options) {
  const double left = 80, right = 160, top = 50, bottom = 60;
  const double plot_w = options.width - left - right;
  const double plot_h = options.height - top - bottom;

  std::size_t max_len = 1;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (const auto &s : series) {
    max_len = std::max(max_len, s.values.size());
    for (double v : s.values) {
      if (options.log_y && !(v > 0)) continue;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  if (!(lo <= hi)) lo = 0, hi = 1;

  auto transform = [&](double v) { return options.log_y ? std::log10(v) : v; };
  double y_lo = transform(lo), y_hi = transform(hi);
  if (y_hi - y_lo < 1e-12) y_lo -= 0.5, y_hi += 0.5;
  const double pad = 0.05 * (y_hi - y_lo);
  y_lo -= pad;
  y_hi += pad;

  auto px = [&](std::size_t i) {
    const double span = max_len > 1 ? static_cast<double>(max_len - 1) : 1.0;
    return left + plot_w * static_cast<double>(i) / span;
  };
  auto py = [&](double v) { return top + plot_h * (1.0 - (transform(v) - y_lo) / (y_hi - y_lo)); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width << "\" height=\""
      << options.height << "\" viewBox=\"0 0 " << options.width << ' ' << options.height
      << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << options.width / 2 << "\" y=\"28\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"16\">" << svg_escape(options.title)
      << "</text>\n";

  // Axes.
  svg << "<line x1=\"" << left << "\" y1=\"" << top + plot_h << "\" x2=\"" << left + plot_w
      << "\" y2=\"" << top + plot_h << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\""
      << top + plot_h << "\" stroke=\"black\"/>\n";
  for (int k = 0; k <= 4; ++k) {
    const double t = y_lo + (y_hi - y_lo) * k / 4.0;
    const double value = options.log_y ? std::pow(10.0, t) : t;
    const double y = top + plot_h * (1.0 - k / 4.0);
    svg << "<text x=\"" << left - 8 << "\" y=\"" << fixed(y + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
        << tick_label(value) << "</text>\n";
  }
  svg << "<text x=\"" << left << "\" y=\"" << top + plot_h + 20
      << "\" font-family=\"sans-serif\" font-size=\"11\">1</text>\n";
  svg << "<text x=\"" << left + plot_w << "\" y=\"" << top + plot_h + 20
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << max_len
      << "</text>\n";
  svg << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << options.height - 15
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">iteration</text>\n";
  svg << "<text x=\"20\" y=\"" << top + plot_h / 2 << "\" transform=\"rotate(-90 20 "
      << top + plot_h / 2 << ")\" text-anchor=\"middle\" font-family=\"sans-serif\" "
      << "font-size=\"13\">" << svg_escape(options.y_label)
      << (options.log_y ? " (log scale)" : "") << "</text>\n";

  for (std::size_t s = 0; s < series.size(); ++s) {
    const char *colour = kPalette[s % std::size(kPalette)];
    svg << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.2\" points=\"";
    bool first = true;
    for (std::size_t i = 0; i < series[s].values.size(); ++i) {
      double v = series[s].values[i];
      if (options.log_y && !(v > 0)) v = lo;
      svg << (first ? "" : " ") << fixed(px(i)) << ',' << fixed(py(v));
      first = false;
    }
    svg << "\"/>\n";
    const double ly = top + 16.0 * static_cast<double>(s) + 8;
    svg << "<line x1=\"" << left + plot_w + 12 << "\" y1=\"" << ly << "\" x2=\""
        << left + plot_w + 32 << "\" y2=\"" << ly << "\" stroke=\"" << colour
        << "\" stroke-width=\"2\"/>\n";
    svg << "<text x=\"" << left + plot_w + 38 << "\" y=\"" << ly + 4
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << svg_escape(series[s].label)
        << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

} // namespace fiatsim
