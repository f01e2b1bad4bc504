#include "volrisk/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "volrisk/errors.hpp"
#include "volrisk/parallel.hpp"

namespace volrisk {

namespace {

constexpr std::size_t kKsBlock = 1024;

double metric_value(const RiskMetricsPoint& p, const std::string& name) {
  if (name == "eta") return p.eta;
  if (name == "ratio_obs") return p.ratio_obs;
  if (name == "ratio_merton") return p.ratio_merton;
  if (name == "market_por") return p.market_por;
  if (name == "volume_por") return p.volume_por;
  if (name == "trading_por") return p.trading_por;
  if (name == "mu_gamma") return p.mu_gamma;
  throw Error(Errc::invalid_config, "unknown metric '" + name + "'");
}

}  // namespace

RhoMode rho_mode_from_string(const std::string& name) {
  if (name == "estimated") return RhoMode::estimated;
  if (name == "zero") return RhoMode::zero;
  throw Error(Errc::invalid_config, "unknown rho mode '" + name + "'");
}

KsMode ks_mode_from_string(const std::string& name) {
  if (name == "levels") return KsMode::levels;
  if (name == "increments") return KsMode::increments;
  throw Error(Errc::invalid_config, "unknown ks mode '" + name + "'");
}

const char* to_string(RhoMode mode) {
  return mode == RhoMode::estimated ? "estimated" : "zero";
}

const char* to_string(KsMode mode) {
  return mode == KsMode::levels ? "levels" : "increments";
}

const std::vector<std::string>& segment_metric_names() {
  static const std::vector<std::string> names = {
      "eta",        "ratio_obs",   "ratio_merton", "market_por",
      "volume_por", "trading_por", "mu_gamma"};
  return names;
}

std::vector<SegmentSummary> summarize_segments(const std::vector<RiskMetricsPoint>& metrics,
                                               const std::vector<Date>& breakpoints) {
  std::vector<SegmentSummary> out;
  if (metrics.empty()) return out;

  std::vector<Date> bps = breakpoints;
  std::sort(bps.begin(), bps.end());

  // Segment s covers dates in [bps[s-1], bps[s]); first/last segments are
  // open-ended.
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  std::size_t begin = 0;
  for (const Date& bp : bps) {
    std::size_t end = begin;
    while (end < metrics.size() && metrics[end].date < bp) ++end;
    ranges.emplace_back(begin, end);
    begin = end;
  }
  ranges.emplace_back(begin, metrics.size());

  for (const auto& [lo, hi] : ranges) {
    if (hi - lo < 2) continue;  // intercept regression needs >= 2 rows
    for (const auto& name : segment_metric_names()) {
      std::vector<double> values;
      values.reserve(hi - lo);
      for (std::size_t i = lo; i < hi; ++i) values.push_back(metric_value(metrics[i], name));
      SegmentSummary summary;
      summary.metric = name;
      summary.start = metrics[lo].date;
      summary.end = metrics[hi - 1].date;
      summary.fit = intercept_regression(values);
      out.push_back(std::move(summary));
    }
  }
  return out;
}

AnalysisResult run_analysis(const AlignedSeries& series, const AnalyzeOptions& options) {
  if (!(options.annualization > 0.0)) {
    throw Error(Errc::invalid_config, "annualization must be > 0");
  }
  const double dt = 1.0 / options.annualization;

  AnalysisResult result;
  result.estimates = rolling_fit(series, options.window, dt, options.threads);
  const std::size_t n_windows = result.estimates.size();

  // KS battery per window.  Levels mode tests window+1 standardized log
  // levels, increments mode the `window` log increments.
  const std::size_t ks_n =
      options.ks_mode == KsMode::levels ? options.window + 1 : options.window;
  if (ks_n >= 8) {
    result.stat_tests.resize(n_windows);
    std::vector<double> log_prices(series.size());
    std::vector<double> log_volumes(series.size());
    for (std::size_t i = 0; i < series.size(); ++i) {
      log_prices[i] = std::log(series.prices[i]);
      log_volumes[i] = std::log(series.volumes[i]);
    }
    for_each_block(n_windows, kKsBlock, options.threads,
                   [&](std::size_t, std::size_t w0, std::size_t w1) {
      std::vector<double> sample(ks_n);
      for (std::size_t w = w0; w < w1; ++w) {
        KsRow row;
        row.date = result.estimates.dates[w];
        for (int which = 0; which < 2; ++which) {
          const auto& logs = which == 0 ? log_volumes : log_prices;
          if (options.ks_mode == KsMode::levels) {
            for (std::size_t k = 0; k < ks_n; ++k) sample[k] = logs[w + k];
          } else {
            for (std::size_t k = 0; k < ks_n; ++k) sample[k] = logs[w + k + 1] - logs[w + k];
          }
          KsResult ks;
          try {
            ks = ks_normal(sample);
          } catch (const Error& e) {
            if (e.code() != Errc::zero_variance) throw;
            ks.statistic = 0.0;  // constant window: degenerate, report as fit
            ks.p_value = 1.0;
            ks.n = ks_n;
          }
          if (which == 0) {
            row.ks_stat_logvol = ks.statistic;
            row.ks_p_logvol = ks.p_value;
          } else {
            row.ks_stat_logprice = ks.statistic;
            row.ks_p_logprice = ks.p_value;
          }
        }
        result.stat_tests[w] = row;
      }
    });
  }

  // Derived metrics, r from the aligned risk-free at each anchor.
  result.metrics.resize(n_windows);
  for_each_block(n_windows, kKsBlock, options.threads,
                 [&](std::size_t, std::size_t w0, std::size_t w1) {
    for (std::size_t w = w0; w < w1; ++w) {
      const double rho =
          options.rho_mode == RhoMode::zero ? 0.0 : result.estimates.rho[w];
      const double r = series.risk_free[w + options.window];
      result.metrics[w] =
          compute_risk_metrics(result.estimates.dates[w], result.estimates.price_fit[w],
                               result.estimates.volume_fit[w], rho, r);
    }
  });

  result.segments = summarize_segments(result.metrics, options.segments);
  result.forecasts = one_day_ahead(series, result.estimates, options.forecast_mode, dt);
  return result;
}

}  // namespace volrisk
