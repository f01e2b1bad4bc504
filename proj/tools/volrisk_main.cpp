// volrisk -- volume-implied risk estimation toolkit.
//
// Subcommands:
//   analyze   rolling GBM fits, KS battery, risk metrics, segment summaries,
//             one-day-ahead forecasts -> five CSV tables
//   simulate  heterogeneous-trader aggregation Monte Carlo -> aggregation /
//             convergence CSV tables
//   forecast  one-day-ahead forecasts only
//   version   print the semantic version
//   help      print usage
//
// Exit codes: 0 ok, 1 validation failure, 2 I/O failure.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "volrisk/analysis.hpp"
#include "volrisk/config.hpp"
#include "volrisk/errors.hpp"
#include "volrisk/market_data.hpp"
#include "volrisk/reports.hpp"
#include "volrisk/trader_sim.hpp"
#include "volrisk/version.hpp"

namespace fs = std::filesystem;
using namespace volrisk;

namespace {

struct AnalyzeArgs {
  std::string config_path;
  std::string prices_path;
  std::string rates_path;
  std::string out_dir = ".";
  std::size_t window = 125;
  double annualization = kTradingDaysPerYear;
  bool rho_zero = false;
  std::string segments;  // comma-separated breakpoint dates
  bool yield_percent = false;
  std::string ks_mode = "levels";
  std::string mode = "reconstruction";
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::string date_format = "%Y-%m-%d";
  std::string price_columns = "date,close,volume";
  std::string rate_columns = "date,yield";
};

// Applies `key = value` pairs from --config for every option the user did
// not give on the command line (flags override file values).
void apply_config_file(const CLI::App* cmd, AnalyzeArgs& args) {
  const auto kv = parse_key_values_file(args.config_path);
  const auto from_file = [&](const char* flag) { return cmd->count(flag) == 0; };
  const auto to_u64 = [](const std::string& key, const std::string& value) -> std::uint64_t {
    try {
      std::size_t pos = 0;
      const auto v = std::stoull(value, &pos);
      if (pos != value.size()) throw std::invalid_argument(value);
      return v;
    } catch (const std::exception&) {
      throw Error(Errc::invalid_config, key + " = '" + value + "' is not an integer");
    }
  };
  const auto to_f64 = [](const std::string& key, const std::string& value) -> double {
    try {
      std::size_t pos = 0;
      const auto v = std::stod(value, &pos);
      if (pos != value.size()) throw std::invalid_argument(value);
      return v;
    } catch (const std::exception&) {
      throw Error(Errc::invalid_config, key + " = '" + value + "' is not a number");
    }
  };
  const auto to_flag = [](const std::string& key, const std::string& value) -> bool {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw Error(Errc::invalid_config, key + " = '" + value + "' is not a boolean");
  };

  for (const auto& [key, value] : kv) {
    if (key == "prices") {
      if (from_file("--prices")) args.prices_path = value;
    } else if (key == "rates") {
      if (from_file("--rates")) args.rates_path = value;
    } else if (key == "out") {
      if (from_file("--out")) args.out_dir = value;
    } else if (key == "window") {
      if (from_file("--window")) args.window = std::size_t(to_u64(key, value));
    } else if (key == "annualization") {
      if (from_file("--annualization")) args.annualization = to_f64(key, value);
    } else if (key == "rho_zero") {
      if (from_file("--rho-zero")) args.rho_zero = to_flag(key, value);
    } else if (key == "segments") {
      if (from_file("--segments")) args.segments = value;
    } else if (key == "yield_percent") {
      if (from_file("--yield-percent")) args.yield_percent = to_flag(key, value);
    } else if (key == "ks_mode") {
      if (from_file("--ks-mode")) args.ks_mode = value;
    } else if (key == "mode") {
      if (from_file("--mode")) args.mode = value;
    } else if (key == "seed") {
      if (from_file("--seed")) args.seed = to_u64(key, value);
    } else if (key == "threads") {
      if (from_file("--threads")) args.threads = unsigned(to_u64(key, value));
    } else if (key == "date_format") {
      if (from_file("--date-format")) args.date_format = value;
    } else if (key == "price_columns") {
      if (from_file("--price-columns")) args.price_columns = value;
    } else if (key == "rate_columns") {
      if (from_file("--rate-columns")) args.rate_columns = value;
    } else {
      throw Error(Errc::invalid_config, "unknown config key '" + key + "'");
    }
  }
}

void finalize_args(const CLI::App* cmd, AnalyzeArgs& args) {
  if (!args.config_path.empty()) apply_config_file(cmd, args);
  if (args.prices_path.empty()) {
    throw Error(Errc::invalid_config, "--prices is required (flag or config file)");
  }
  if (args.rates_path.empty()) {
    throw Error(Errc::invalid_config, "--rates is required (flag or config file)");
  }
}

struct SimulateArgs {
  std::string spec_path;
  std::string out_dir = ".";
  unsigned threads = 0;
};

std::vector<std::string> split_csv_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) items.push_back(item);
  return items;
}

// Tracks emitted files so a failed run leaves no partial outputs behind.
class OutputSet {
 public:
  explicit OutputSet(const std::string& dir) : dir_(dir) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw Error(Errc::io_failure, "cannot create output directory '" + dir + "'");
  }

  void write(const std::string& name, const std::function<void(std::ostream&)>& writer) {
    const fs::path path = dir_ / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(Errc::io_failure, "cannot open '" + path.string() + "' for writing");
    written_.push_back(path);
    writer(out);
    out.flush();
    if (!out) throw Error(Errc::io_failure, "write failed for '" + path.string() + "'");
    std::cout << "wrote " << path.string() << '\n';
  }

  void remove_all() noexcept {
    for (const auto& path : written_) {
      std::error_code ec;
      fs::remove(path, ec);
    }
  }

 private:
  fs::path dir_;
  std::vector<fs::path> written_;
};

AlignedSeries load_series(const AnalyzeArgs& args) {
  const auto price_cols = split_csv_list(args.price_columns);
  if (price_cols.size() != 3) {
    throw Error(Errc::invalid_config, "--price-columns needs 'date,close,volume' names");
  }
  const auto rate_cols = split_csv_list(args.rate_columns);
  if (rate_cols.size() != 2) {
    throw Error(Errc::invalid_config, "--rate-columns needs 'date,yield' names");
  }

  CsvSchema price_schema;
  price_schema.date_column = price_cols[0];
  price_schema.close_column = price_cols[1];
  price_schema.volume_column = price_cols[2];
  price_schema.date_format = args.date_format;

  RiskFreeCsvSchema rate_schema;
  rate_schema.date_column = rate_cols[0];
  rate_schema.yield_column = rate_cols[1];
  rate_schema.date_format = args.date_format;
  rate_schema.yield_is_percent = args.yield_percent;

  const auto observations = ingest_csv(args.prices_path, price_schema);
  const auto rates = ingest_risk_free_csv(args.rates_path, rate_schema);
  return align(observations, rates);
}

AnalyzeOptions to_options(const AnalyzeArgs& args) {
  AnalyzeOptions options;
  options.window = args.window;
  options.annualization = args.annualization;
  options.rho_mode = args.rho_zero ? RhoMode::zero : RhoMode::estimated;
  options.ks_mode = ks_mode_from_string(args.ks_mode);
  options.forecast_mode = forecast_mode_from_string(args.mode);
  options.threads = args.threads;
  for (const auto& text : split_csv_list(args.segments)) {
    if (!text.empty()) options.segments.push_back(parse_date(text, args.date_format));
  }
  return options;
}

int run_analyze(const AnalyzeArgs& args) {
  const auto series = load_series(args);
  const auto result = run_analysis(series, to_options(args));

  OutputSet outputs(args.out_dir);
  try {
    outputs.write("estimates.csv",
                  [&](std::ostream& o) { write_estimates_csv(result.estimates, o); });
    outputs.write("tests.csv",
                  [&](std::ostream& o) { write_stat_tests_csv(result.stat_tests, o); });
    outputs.write("metrics.csv",
                  [&](std::ostream& o) { write_metrics_csv(result.metrics, o); });
    outputs.write("segments.csv",
                  [&](std::ostream& o) { write_segments_csv(result.segments, o); });
    outputs.write("forecast.csv",
                  [&](std::ostream& o) { write_forecast_csv(result.forecasts, o); });
  } catch (...) {
    outputs.remove_all();
    throw;
  }
  return 0;
}

int run_forecast(const AnalyzeArgs& args) {
  const auto series = load_series(args);
  AnalyzeOptions options = to_options(args);
  const double dt = 1.0 / options.annualization;
  const auto estimates = rolling_fit(series, options.window, dt, options.threads);
  const auto points = one_day_ahead(series, estimates, options.forecast_mode, dt);

  OutputSet outputs(args.out_dir);
  try {
    outputs.write("forecast.csv", [&](std::ostream& o) { write_forecast_csv(points, o); });
  } catch (...) {
    outputs.remove_all();
    throw;
  }
  return 0;
}

int run_simulate(const SimulateArgs& args) {
  const SimulationRunSpec run = load_simulation_spec(args.spec_path);

  const auto aggregation = simulate_xi(run.population, args.threads);
  const auto convergence = convergence_study(run.population, run.n_grid, args.threads);

  OutputSet outputs(args.out_dir);
  try {
    outputs.write("aggregation.csv", [&](std::ostream& o) {
      write_aggregation_csv(aggregation, run.population, o);
    });
    outputs.write("convergence.csv",
                  [&](std::ostream& o) { write_convergence_csv(convergence, o); });
    if (run.emit_paths > 0) {
      TraderPopulationSpec path_spec = run.population;
      path_spec.n_traders = run.emit_paths;
      // Homogeneous market beliefs for the emitted paths: drift r plus one
      // unit of alpha per sqrt-year at 20% volatility.
      const double sigma = 0.2;
      std::vector<double> mu(run.emit_paths,
                             run.population.r + sigma * run.population.mu_alpha);
      std::vector<double> sig(run.emit_paths, sigma);
      const auto paths = simulate_trader_paths(path_spec, mu, sig, args.threads);
      outputs.write("paths.csv",
                    [&](std::ostream& o) { write_trader_paths_csv(paths, o); });
    }
  } catch (...) {
    outputs.remove_all();
    throw;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"volume-implied risk estimation toolkit", "volrisk"};
  app.set_version_flag("--version", std::string("volrisk ") + kVersion);
  app.require_subcommand(0, 1);

  AnalyzeArgs analyze_args;
  SimulateArgs simulate_args;
  AnalyzeArgs forecast_args;

  auto add_series_options = [](CLI::App* cmd, AnalyzeArgs& args) {
    cmd->add_option("--config", args.config_path,
                    "flat key = value config file; flags override its values");
    cmd->add_option("--prices", args.prices_path, "price/volume CSV (date,close,volume)");
    cmd->add_option("--rates", args.rates_path, "risk-free CSV (date,yield as decimal)");
    cmd->add_option("--out", args.out_dir, "output directory")->capture_default_str();
    cmd->add_option("--window", args.window, "rolling window in trading days")
        ->capture_default_str();
    cmd->add_option("--annualization", args.annualization, "trading days per year")
        ->capture_default_str();
    cmd->add_flag("--yield-percent", args.yield_percent,
                  "risk-free yields are percentages; divide by 100 on ingest");
    cmd->add_option("--mode", args.mode, "forecast mode: reconstruction | point")
        ->capture_default_str();
    cmd->add_option("--seed", args.seed, "run seed (recorded for reproducibility)")
        ->capture_default_str();
    cmd->add_option("--threads", args.threads, "worker threads (0 = hardware)")
        ->capture_default_str();
    cmd->add_option("--date-format", args.date_format, "std::get_time date format")
        ->capture_default_str();
    cmd->add_option("--price-columns", args.price_columns, "date,close,volume column names")
        ->capture_default_str();
    cmd->add_option("--rate-columns", args.rate_columns, "date,yield column names")
        ->capture_default_str();
  };

  CLI::App* analyze = app.add_subcommand(
      "analyze", "full pipeline: estimates, tests, metrics, segments, forecast");
  add_series_options(analyze, analyze_args);
  analyze->add_flag("--rho-zero", analyze_args.rho_zero,
                    "force rho = 0 in the risk formulas");
  analyze->add_option("--segments", analyze_args.segments,
                      "comma-separated breakpoint dates for segment summaries");
  analyze->add_option("--ks-mode", analyze_args.ks_mode, "KS input: levels | increments")
      ->capture_default_str();

  CLI::App* forecast = app.add_subcommand("forecast", "one-day-ahead forecasts only");
  add_series_options(forecast, forecast_args);

  CLI::App* simulate =
      app.add_subcommand("simulate", "trader-population aggregation Monte Carlo");
  simulate->add_option("spec", simulate_args.spec_path, "simulation spec file (key = value)")
      ->required();
  simulate->add_option("--out", simulate_args.out_dir, "output directory")
      ->capture_default_str();
  simulate->add_option("--threads", simulate_args.threads, "worker threads (0 = hardware)")
      ->capture_default_str();

  CLI::App* version = app.add_subcommand("version", "print the semantic version");
  CLI::App* help = app.add_subcommand("help", "print usage");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (version->parsed()) {
      std::cout << "volrisk " << kVersion << '\n';
      return 0;
    }
    if (help->parsed() || app.get_subcommands().empty()) {
      // App::help() delegates to the parsed subcommand; render the root app.
      std::cout << app.get_formatter()->make_help(&app, app.get_name(),
                                                  CLI::AppFormatMode::Normal);
      return help->parsed() ? 0 : 1;
    }
    if (analyze->parsed()) {
      finalize_args(analyze, analyze_args);
      return run_analyze(analyze_args);
    }
    if (forecast->parsed()) {
      finalize_args(forecast, forecast_args);
      return run_forecast(forecast_args);
    }
    if (simulate->parsed()) return run_simulate(simulate_args);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == Errc::io_failure ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
