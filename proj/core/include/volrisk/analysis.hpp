#pragma once

#include <string>
#include <vector>

#include "volrisk/date.hpp"
#include "volrisk/forecast.hpp"
#include "volrisk/gbm_estimation.hpp"
#include "volrisk/market_data.hpp"
#include "volrisk/risk_metrics.hpp"
#include "volrisk/stat_tests.hpp"

namespace volrisk {

/// Correlation fed into the risk formulas: the per-window estimate, or zero
/// everywhere (the weak-correlation reading of the empirical finding).
enum class RhoMode { estimated, zero };

/// What the per-window KS normality battery is applied to: standardized log
/// levels (mirrors the reference figures) or log increments (the
/// statistically orthodox choice for a GBM).
enum class KsMode { levels, increments };

RhoMode rho_mode_from_string(const std::string& name);
KsMode ks_mode_from_string(const std::string& name);
const char* to_string(RhoMode mode);
const char* to_string(KsMode mode);

/// Per-window KS results for log volume and log price.
struct KsRow {
  Date date;
  double ks_stat_logvol = 0.0;
  double ks_p_logvol = 1.0;
  double ks_stat_logprice = 0.0;
  double ks_p_logprice = 1.0;
};

/// Intercept-only summary of one metric over one date segment.
struct SegmentSummary {
  std::string metric;
  Date start;
  Date end;
  InterceptFit fit;
};

struct AnalyzeOptions {
  std::size_t window = 125;
  double annualization = kTradingDaysPerYear;  // trading days per year
  RhoMode rho_mode = RhoMode::estimated;
  KsMode ks_mode = KsMode::levels;
  ForecastMode forecast_mode = ForecastMode::reconstruction;
  std::vector<Date> segments;  // breakpoints; empty = one segment
  unsigned threads = 0;
};

struct AnalysisResult {
  WindowedEstimates estimates;
  std::vector<KsRow> stat_tests;  // empty when the window is too short for KS
  std::vector<RiskMetricsPoint> metrics;
  std::vector<SegmentSummary> segments;
  std::vector<ForecastPoint> forecasts;
};

/// Metrics summarized per segment, in emission order.
const std::vector<std::string>& segment_metric_names();

/// The whole estimation pipeline: rolling fits, per-window KS battery,
/// derived risk metrics (r taken from the aligned risk-free at each anchor),
/// per-segment intercept regressions, and one-day-ahead forecasts.
AnalysisResult run_analysis(const AlignedSeries& series, const AnalyzeOptions& options);

/// Splits metric rows at the breakpoint dates and fits a constant to each
/// metric on each segment; segments with fewer than 2 rows are skipped.
std::vector<SegmentSummary> summarize_segments(const std::vector<RiskMetricsPoint>& metrics,
                                               const std::vector<Date>& breakpoints);

}  // namespace volrisk
