#include "volrisk/forecast.hpp"

#include <algorithm>
#include <cmath>

#include "volrisk/errors.hpp"

namespace volrisk {

ForecastMode forecast_mode_from_string(const std::string& name) {
  if (name == "reconstruction") return ForecastMode::reconstruction;
  if (name == "point") return ForecastMode::point;
  throw Error(Errc::invalid_config, "unknown forecast mode '" + name + "'");
}

const char* to_string(ForecastMode mode) {
  return mode == ForecastMode::reconstruction ? "reconstruction" : "point";
}

std::vector<ForecastPoint> one_day_ahead(const AlignedSeries& series,
                                         const WindowedEstimates& estimates,
                                         ForecastMode mode, double dt_years) {
  if (estimates.size() == 0) {
    throw Error(Errc::coverage_gap, "no estimates available");
  }
  const auto first_it =
      std::find(series.dates.begin(), series.dates.end(), estimates.dates.front());
  if (first_it == series.dates.end()) {
    throw Error(Errc::coverage_gap, "estimate anchor " + to_string(estimates.dates.front()) +
                                        " not found in the series");
  }
  const std::size_t first = std::size_t(first_it - series.dates.begin());

  std::vector<ForecastPoint> points;
  points.reserve(estimates.size());
  for (std::size_t w = 0; w < estimates.size(); ++w) {
    const std::size_t t = first + w;
    if (t >= series.size() || series.dates[t] != estimates.dates[w]) {
      throw Error(Errc::coverage_gap, "estimate anchors do not line up with the series at " +
                                          to_string(estimates.dates[w]));
    }
    if (t + 1 >= series.size()) break;  // last anchor has nothing to forecast

    const double s_t = series.prices[t];
    const double s_next = series.prices[t + 1];
    const double mu = estimates.price_fit[w].mu;
    const double sigma = estimates.price_fit[w].sigma;

    ForecastPoint point;
    point.date = series.dates[t + 1];
    point.observed = s_next;
    point.mode = mode;
    if (mode == ForecastMode::point) {
      point.forecast = s_t * std::exp(mu * dt_years);
    } else {
      // Back the realized standardized shock out of the observed return and
      // re-apply it; closes to the observed price up to rounding.
      const double log_drift = (mu - 0.5 * sigma * sigma) * dt_years;
      if (sigma > 0.0) {
        const double shock = (std::log(s_next / s_t) - log_drift) / sigma;
        point.forecast = s_t * std::exp(log_drift + sigma * shock);
      } else {
        point.forecast = s_next;
      }
    }
    points.push_back(point);
  }

  if (points.empty()) {
    throw Error(Errc::coverage_gap, "estimates do not cover any forecastable date");
  }
  return points;
}

ForecastDiagnostics forecast_diagnostics(const std::vector<ForecastPoint>& points) {
  if (points.empty()) {
    throw Error(Errc::empty_input, "no forecast points");
  }
  double abs_sum = 0.0, sq_sum = 0.0;
  for (const auto& p : points) {
    const double rel = (p.forecast - p.observed) / p.observed;
    abs_sum += std::fabs(rel);
    sq_sum += rel * rel;
  }

  std::size_t scored = 0, hits = 0;
  for (std::size_t k = 1; k < points.size(); ++k) {
    const double prev = points[k - 1].observed;
    const double d_fc = points[k].forecast - prev;
    const double d_obs = points[k].observed - prev;
    ++scored;
    if (d_fc != 0.0 && d_obs != 0.0 && ((d_fc > 0.0) == (d_obs > 0.0))) ++hits;
  }

  ForecastDiagnostics diag;
  diag.mae_rel = abs_sum / double(points.size());
  diag.rmse_rel = std::sqrt(sq_sum / double(points.size()));
  diag.hit_rate = scored > 0 ? double(hits) / double(scored) : 0.0;
  return diag;
}

}  // namespace volrisk
