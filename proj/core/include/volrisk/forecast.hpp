#pragma once

#include <string>
#include <vector>

#include "volrisk/date.hpp"
#include "volrisk/gbm_estimation.hpp"
#include "volrisk/market_data.hpp"

namespace volrisk {

/// reconstruction: next-day price rebuilt from the fitted parameters and the
/// realized standardized shock backed out of the observed return -- closes to
/// the observed price exactly and validates internal consistency (this is
/// what overlapping forecast-vs-observed curves show).
/// point: the honest out-of-sample conditional expectation S_t exp(mu_hat dt).
enum class ForecastMode { reconstruction, point };

ForecastMode forecast_mode_from_string(const std::string& name);
const char* to_string(ForecastMode mode);

struct ForecastPoint {
  Date date;            // the forecast date (t+1)
  double observed = 0;  // realized close at t+1
  double forecast = 0;  // > 0
  ForecastMode mode = ForecastMode::reconstruction;
};

struct ForecastDiagnostics {
  double mae_rel = 0.0;
  double rmse_rel = 0.0;
  double hit_rate = 0.0;  // directional hits vs. previous close
};

/// One-day-ahead forecasts for every estimate anchor that has a next
/// observation.  Anchors must be a contiguous run of the series dates
/// (rolling_fit output); throws CoverageGap otherwise, Empty when no anchor
/// has a successor.
std::vector<ForecastPoint> one_day_ahead(const AlignedSeries& series,
                                         const WindowedEstimates& estimates,
                                         ForecastMode mode,
                                         double dt_years = 1.0 / kTradingDaysPerYear);

/// Relative MAE/RMSE and the directional hit rate.  Direction is scored
/// against the previous point's observed close, so the first point is not
/// scored; an exactly flat forecast counts as a miss.
/// Throws Empty.
ForecastDiagnostics forecast_diagnostics(const std::vector<ForecastPoint>& points);

}  // namespace volrisk
