#include <doctest.h>

#include <cmath>
#include <functional>
#include <sstream>

#include "synthetic.hpp"
#include "volrisk/analysis.hpp"
#include "volrisk/config.hpp"
#include "volrisk/csv.hpp"
#include "volrisk/errors.hpp"
#include "volrisk/reports.hpp"

using namespace volrisk;

namespace {

constexpr double kDt = 1.0 / 252.0;

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::io_failure;
}

AnalysisResult small_analysis(unsigned threads = 0) {
  const auto series =
      synthetic::model_series(400, 0.10, 0.02, 0.2, 0.04, 0.0, 3.0, kDt, 321);
  AnalyzeOptions options;
  options.window = 125;
  options.threads = threads;
  options.segments = {series.dates[260]};
  return run_analysis(series, options);
}

}  // namespace

TEST_CASE("key-value parsing: comments, spacing, overrides, errors") {
  std::istringstream in("# comment\n"
                        "a = 1\n"
                        "  b=2   # trailing comment\n"
                        "\n"
                        "a = 3\n");
  const auto kv = parse_key_values(in);
  CHECK(kv.at("a") == "3");
  CHECK(kv.at("b") == "2");

  std::istringstream bad("just a line\n");
  CHECK(code_of([&] { parse_key_values(bad); }) == Errc::invalid_config);
}

TEST_CASE("simulation spec: full round trip") {
  std::istringstream in("n_traders = 100000\n"
                        "mu_alpha = 0.5\n"
                        "sigma_alpha = 0.1\n"
                        "mu_gamma = 0.5\n"
                        "sigma_gamma = 0.1\n"
                        "r = 0.02\n"
                        "dt_years = 0.003968253968253968\n"
                        "n_steps = 1\n"
                        "seed = 42\n"
                        "alpha_dist = normal\n"
                        "gamma_dist = shifted-uniform\n"
                        "n_grid = 100,1000,10000\n");
  const auto run = parse_simulation_spec(parse_key_values(in));
  CHECK(run.population.n_traders == 100000);
  CHECK(run.population.sigma_gamma == doctest::Approx(0.1));
  CHECK(run.population.gamma_dist == Dist::shifted_uniform);
  CHECK(run.n_grid == std::vector<std::size_t>{100, 1000, 10000});
  CHECK(run.emit_paths == 0);
}

TEST_CASE("simulation spec: defaults and validation errors") {
  std::istringstream in("n_traders = 5000\nmu_alpha = 0.4\nseed = 1\n");
  const auto run = parse_simulation_spec(parse_key_values(in));
  CHECK(run.n_grid == std::vector<std::size_t>{100, 1000, 5000});

  std::istringstream unknown("not_a_key = 1\n");
  CHECK(code_of([&] { parse_simulation_spec(parse_key_values(unknown)); }) ==
        Errc::invalid_config);

  std::istringstream bad_value("n_traders = many\n");
  CHECK(code_of([&] { parse_simulation_spec(parse_key_values(bad_value)); }) ==
        Errc::invalid_config);

  std::istringstream bad_grid("n_traders = 100\nn_grid = 100,10\n");
  CHECK(code_of([&] { parse_simulation_spec(parse_key_values(bad_grid)); }) ==
        Errc::invalid_config);
}

TEST_CASE("format_double round-trips exactly") {
  for (double v : {0.04, 1.0 / 3.0, 7.937e-5, -1.25e-300, 252.0, 0.0}) {
    double parsed;
    REQUIRE(csv::parse_double(csv::format_double(v), parsed));
    CHECK(parsed == v);
  }
}

TEST_CASE("run_analysis: output shapes and row counts") {
  const auto result = small_analysis();
  CHECK(result.estimates.size() == 400 - 125);
  CHECK(result.stat_tests.size() == result.estimates.size());
  CHECK(result.metrics.size() == result.estimates.size());
  CHECK(result.forecasts.size() == result.estimates.size() - 1);
  // two segments x seven metrics
  CHECK(result.segments.size() == 2 * segment_metric_names().size());
}

TEST_CASE("run_analysis: identical bits under 1, 2, and 8 threads") {
  const auto a = small_analysis(1);
  const auto b = small_analysis(2);
  const auto c = small_analysis(8);

  auto render = [](const AnalysisResult& r) {
    std::ostringstream out;
    write_estimates_csv(r.estimates, out);
    write_stat_tests_csv(r.stat_tests, out);
    write_metrics_csv(r.metrics, out);
    write_segments_csv(r.segments, out);
    write_forecast_csv(r.forecasts, out);
    return out.str();
  };
  const auto sa = render(a);
  CHECK(sa == render(b));
  CHECK(sa == render(c));
}

TEST_CASE("run_analysis: rho-zero mode forces the correlation out of the formulas") {
  const auto series =
      synthetic::model_series(300, 0.10, 0.02, 0.2, 0.04, 0.5, 3.0, kDt, 11);
  AnalyzeOptions options;
  options.window = 125;
  const auto estimated = run_analysis(series, options);
  options.rho_mode = RhoMode::zero;
  const auto zeroed = run_analysis(series, options);

  for (std::size_t w = 0; w < zeroed.metrics.size(); ++w) {
    const auto& m = zeroed.metrics[w];
    CHECK(m.volume_premium == doctest::Approx(m.psi));  // rho term gone
    const auto& e = zeroed.estimates;
    const double expected_mg = risk_aversion(e.price_fit[w].mu, series.risk_free[w + 125],
                                             e.price_fit[w].sigma, m.psi, 0.0, m.eta);
    CHECK(m.mu_gamma == doctest::Approx(expected_mg).epsilon(1e-12));
  }
  // and the two modes genuinely differ on correlated data
  CHECK(estimated.metrics[0].mu_gamma != zeroed.metrics[0].mu_gamma);
}

TEST_CASE("run_analysis: ks increments mode differs from levels mode") {
  const auto series =
      synthetic::model_series(300, 0.10, 0.02, 0.2, 0.04, 0.0, 3.0, kDt, 13);
  AnalyzeOptions options;
  options.window = 125;
  const auto levels = run_analysis(series, options);
  options.ks_mode = KsMode::increments;
  const auto increments = run_analysis(series, options);
  REQUIRE(levels.stat_tests.size() == increments.stat_tests.size());
  CHECK(levels.stat_tests[0].ks_stat_logvol != increments.stat_tests[0].ks_stat_logvol);
  // GBM increments are iid normal: the increments-mode p-values should be
  // healthy in the bulk
  double passed = 0;
  for (const auto& row : increments.stat_tests) passed += row.ks_p_logvol >= 0.05;
  CHECK(passed / double(increments.stat_tests.size()) >= 0.9);
}

TEST_CASE("summarize_segments: date split is honored") {
  const auto result = small_analysis();
  const auto& seg = result.segments;
  REQUIRE(!seg.empty());
  const auto names = segment_metric_names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    CHECK(seg[i].metric == names[i]);
    CHECK(seg[i].start == result.metrics.front().date);
    CHECK(seg[i].end < seg[names.size() + i].start);
  }
  CHECK(seg.back().end == result.metrics.back().date);
}

TEST_CASE("summarize_segments: short segments are skipped") {
  const auto series =
      synthetic::model_series(130, 0.10, 0.02, 0.2, 0.04, 0.0, 3.0, kDt, 17);
  AnalyzeOptions options;
  options.window = 125;
  // breakpoint right after the first metrics row: leading segment has 1 row
  options.segments = {synthetic::next_day(series.dates[125])};
  const auto result = run_analysis(series, options);
  CHECK(result.metrics.size() == 5);
  CHECK(result.segments.size() == segment_metric_names().size());  // only the tail segment
}

TEST_CASE("emitted CSVs re-ingest through the generic reader") {
  const auto result = small_analysis();
  std::ostringstream out;
  write_metrics_csv(result.metrics, out);
  std::istringstream in(out.str());
  const auto table = csv::read(in);
  CHECK(table.header.size() == 13);
  REQUIRE(table.rows.size() == result.metrics.size());
  const auto col = table.column("mu_gamma");
  REQUIRE(col != csv::Table::npos);
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    double v;
    REQUIRE(csv::parse_double(table.rows[i][col], v));
    CHECK(v == result.metrics[i].mu_gamma);  // exact round trip
  }

  std::ostringstream est_out;
  write_estimates_csv(result.estimates, est_out);
  std::istringstream est_in(est_out.str());
  const auto est_table = csv::read(est_in);
  CHECK(est_table.header ==
        std::vector<std::string>{"date", "mu_price", "sigma_price", "mu_vol", "sigma_vol",
                                 "rho", "rho_pvalue"});
}

TEST_CASE("aggregation and convergence CSV writers") {
  TraderPopulationSpec spec;
  spec.n_traders = 1000;
  spec.mu_alpha = 0.5;
  spec.sigma_alpha = 0.1;
  spec.mu_gamma = 0.5;
  spec.r = 0.02;
  spec.dt_years = kDt;
  spec.seed = 3;

  const auto report = simulate_xi(spec);
  std::ostringstream out;
  write_aggregation_csv(report, spec, out);
  std::istringstream in(out.str());
  const auto table = csv::read(in);
  REQUIRE(table.rows.size() == 1);
  CHECK(table.column("theory_mean_xi_alt") != csv::Table::npos);

  const std::vector<std::size_t> grid = {100, 1000};
  const auto reports = convergence_study(spec, grid);
  std::ostringstream cout_;
  write_convergence_csv(reports, cout_);
  std::istringstream cin_(cout_.str());
  const auto ctable = csv::read(cin_);
  CHECK(ctable.rows.size() == 2);
  CHECK(ctable.rows[0][0] == "100");
  CHECK(ctable.rows[1][0] == "1000");
}

TEST_CASE("analysis mode names round-trip; bad names are rejected") {
  CHECK(rho_mode_from_string("zero") == RhoMode::zero);
  CHECK(ks_mode_from_string("increments") == KsMode::increments);
  CHECK(code_of([] { rho_mode_from_string("off"); }) == Errc::invalid_config);
  CHECK(code_of([] { ks_mode_from_string("raw"); }) == Errc::invalid_config);
}

TEST_CASE("run_analysis: annualization rescales the fits consistently") {
  const auto series =
      synthetic::model_series(200, 0.10, 0.02, 0.2, 0.04, 0.0, 3.0, kDt, 19);
  AnalyzeOptions options;
  options.window = 125;
  const auto daily = run_analysis(series, options);
  options.annualization = 504.0;  // half the dt
  const auto fine = run_analysis(series, options);
  for (std::size_t w = 0; w < daily.estimates.size(); ++w) {
    CHECK(fine.estimates.price_fit[w].sigma ==
          doctest::Approx(daily.estimates.price_fit[w].sigma * std::sqrt(2.0))
              .epsilon(1e-12));
    // rho is dt-free
    CHECK(fine.estimates.rho[w] == doctest::Approx(daily.estimates.rho[w]).epsilon(1e-12));
  }
}
