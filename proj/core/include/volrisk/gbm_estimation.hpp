#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "volrisk/date.hpp"
#include "volrisk/market_data.hpp"

namespace volrisk {

inline constexpr double kTradingDaysPerYear = 252.0;

/// GBM parameters fitted on one window of observations.
/// mu is per year, sigma per sqrt-year.
struct GbmEstimate {
  double mu = 0.0;
  double sigma = 0.0;
  Date window_start;  // date of the first observation in the window
  Date window_end;    // anchor date (last observation)
  std::size_t n_obs = 0;  // count of log increments used
};

/// Per-anchor-date rolling estimates for price and volume plus the
/// cross-increment Pearson correlation and its p-value.
struct WindowedEstimates {
  std::vector<Date> dates;
  std::vector<GbmEstimate> price_fit;
  std::vector<GbmEstimate> volume_fit;
  std::vector<double> rho;        // each in [-1, 1]
  std::vector<double> rho_pvalue; // each in [0, 1]

  std::size_t size() const { return dates.size(); }
};

/// Method-of-moments GBM fit on log increments: with m the sample mean and
/// s the unbiased (n-1) sample SD of the log increments,
///   sigma = s / sqrt(dt_years),   mu = m / dt_years + sigma^2 / 2.
/// Requires >= 3 values (>= 2 increments) and dt_years > 0.
/// Window dates are left default; rolling_fit fills them in.
/// Throws TooShort, NonPositive.
GbmEstimate fit_gbm(std::span<const double> values, double dt_years);

/// Rolling backward-looking fit: for each anchor index t in [window, n),
/// price and volume are fitted on the `window` log increments ending at t,
/// and rho is the Pearson correlation of the two increment sequences of that
/// window.  Output length = series length - window; row w is anchored at
/// series.dates[window + w].  Windows are evaluated in fixed-size blocks so
/// results are bitwise identical for any thread count.
/// Degenerate windows (constant price or volume) carry rho = 0, p-value = 1.
/// Throws WindowTooSmall (window < 3), WindowTooLarge (length < window + 1).
WindowedEstimates rolling_fit(const AlignedSeries& series, std::size_t window,
                              double dt_years = 1.0 / kTradingDaysPerYear,
                              unsigned threads = 0);

}  // namespace volrisk
