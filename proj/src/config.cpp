#include "fiatsim/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

namespace fiatsim {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T> T parse_number(std::string_view key, std::string_view text) {
  text = trim(text);
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
    throw ConfigError("invalid value for '" + std::string(key) + "': '" + std::string(text) + "'");
  return value;
}

template <typename T> std::vector<T> parse_list(std::string_view key, std::string_view text) {
  std::vector<T> out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_number<T>(key, text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

using Setter = std::function<void(RunConfig &, std::string_view key, std::string_view value)>;

template <typename T> Setter param_setter(T MarketParams::*field) {
  return [field](RunConfig &c, std::string_view key, std::string_view v) {
    c.params.*field = parse_number<T>(key, v);
  };
}

const std::map<std::string, Setter, std::less<>> &market_keys() {
  static const std::map<std::string, Setter, std::less<>> keys{
      {"n_agents", param_setter(&MarketParams::n_agents)},
      {"initial_savings", param_setter(&MarketParams::initial_savings)},
      {"initial_price", param_setter(&MarketParams::initial_price)},
      {"productivity", param_setter(&MarketParams::productivity)},
      {"consume_factor", param_setter(&MarketParams::consume_factor)},
      {"max_stock", param_setter(&MarketParams::max_stock)},
      {"min_price_change_period", param_setter(&MarketParams::min_price_change_period)},
      {"typical_goods_per_day", param_setter(&MarketParams::typical_goods_per_day)},
      {"goods_utility_scale", param_setter(&MarketParams::goods_utility_scale)},
      {"savings_utility_scale", param_setter(&MarketParams::savings_utility_scale)},
      {"sellers_sampled", param_setter(&MarketParams::sellers_sampled)},
  };
  return keys;
}

const std::map<std::string, Setter, std::less<>> &run_keys() {
  static const std::map<std::string, Setter, std::less<>> keys{
      {"start_prices",
       [](RunConfig &c, std::string_view k, std::string_view v) {
         c.start_prices = parse_list<double>(k, v);
       }},
      {"seeds",
       [](RunConfig &c, std::string_view k, std::string_view v) {
         c.seeds = parse_list<std::uint64_t>(k, v);
       }},
      {"n_iterations",
       [](RunConfig &c, std::string_view k, std::string_view v) {
         c.n_iterations = parse_number<std::size_t>(k, v);
       }},
      {"convergence_window",
       [](RunConfig &c, std::string_view k, std::string_view v) {
         c.convergence_window = parse_number<std::size_t>(k, v);
       }},
      {"convergence_cv_tolerance",
       [](RunConfig &c, std::string_view k, std::string_view v) {
         c.convergence_cv_tolerance = parse_number<double>(k, v);
       }},
      {"attractor_rel_tolerance",
       [](RunConfig &c, std::string_view k, std::string_view v) {
         c.attractor_rel_tolerance = parse_number<double>(k, v);
       }},
  };
  return keys;
}

RunConfig parse(std::string_view text, bool allow_run_keys) {
  RunConfig config;
  std::set<std::string, std::less<>> seen;
  std::size_t line_no = 0;
  std::istringstream lines{std::string(text)};
  for (std::string raw; std::getline(lines, raw);) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    const auto where = " (line " + std::to_string(line_no) + ")";
    if (eq == std::string_view::npos) throw ConfigError("expected 'key = value'" + where);
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));

    const Setter *setter = nullptr;
    if (auto it = market_keys().find(key); it != market_keys().end())
      setter = &it->second;
    else if (auto rt = run_keys().find(key); allow_run_keys && rt != run_keys().end())
      setter = &rt->second;
    if (!setter) throw ConfigError("unknown key '" + std::string(key) + "'" + where);
    if (!seen.emplace(key).second)
      throw ConfigError("duplicate key '" + std::string(key) + "'" + where);
    try {
      (*setter)(config, key, value);
    } catch (const ConfigError &e) {
      throw ConfigError(e.what() + where);
    }
  }
  if (!seen.contains("typical_goods_per_day"))
    config.params.typical_goods_per_day = config.params.productivity;
  return config;
}

} // namespace

SweepSpec RunConfig::sweep_spec() const {
  SweepSpec spec;
  spec.base_params = params;
  spec.start_prices = start_prices;
  spec.seeds = seeds;
  spec.n_iterations = n_iterations;
  spec.convergence_window = convergence_window;
  spec.cv_tolerance = convergence_cv_tolerance;
  return spec;
}

MarketParams parse_market_params(std::string_view text) { return parse(text, false).params; }

RunConfig parse_run_config(std::string_view text) { return parse(text, true); }

RunConfig load_run_config(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_run_config(buffer.str());
  } catch (const ConfigError &e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

} // namespace fiatsim
