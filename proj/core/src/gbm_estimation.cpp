#include "volrisk/gbm_estimation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "volrisk/errors.hpp"
#include "volrisk/parallel.hpp"
#include "volrisk/stat_tests.hpp"

namespace volrisk {

namespace {

// Windows per block for the rolling pass.  Each block recomputes its opening
// sums from scratch and then slides, so block results never depend on which
// thread ran them.
constexpr std::size_t kRollingBlock = 8192;

struct KahanSum {
  double sum = 0.0;
  double c = 0.0;
  void add(double x) {
    const double y = x - c;
    const double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

GbmEstimate fit_from_moments(double m, double s, double dt_years) {
  GbmEstimate est;
  est.sigma = s / std::sqrt(dt_years);
  est.mu = m / dt_years + 0.5 * est.sigma * est.sigma;
  return est;
}

}  // namespace

GbmEstimate fit_gbm(std::span<const double> values, double dt_years) {
  if (values.size() < 3) {
    throw Error(Errc::too_short,
                "GBM fit needs >= 3 values, got " + std::to_string(values.size()));
  }
  if (!(dt_years > 0.0)) {
    throw Error(Errc::non_positive, "dt_years must be > 0");
  }
  const auto incs =
      log_increments(std::vector<double>(values.begin(), values.end()));
  const double m = sample_mean(incs);
  const double s = sample_sd(incs);
  GbmEstimate est = fit_from_moments(m, s, dt_years);
  est.n_obs = incs.size();
  return est;
}

WindowedEstimates rolling_fit(const AlignedSeries& series, std::size_t window,
                              double dt_years, unsigned threads) {
  if (window < 3) {
    throw Error(Errc::window_too_small, "window must be >= 3, got " + std::to_string(window));
  }
  const std::size_t len = series.size();
  if (len < window + 1) {
    throw Error(Errc::window_too_large, "series length " + std::to_string(len) +
                                            " < window + 1 = " + std::to_string(window + 1));
  }
  if (!(dt_years > 0.0)) {
    throw Error(Errc::non_positive, "dt_years must be > 0");
  }

  // Increment k spans observations k -> k+1.
  const auto x = log_increments(series.prices);
  const auto y = log_increments(series.volumes);
  const std::size_t n_windows = len - window;
  const double n = double(window);
  const double nm1 = double(window - 1);

  WindowedEstimates out;
  out.dates.resize(n_windows);
  out.price_fit.resize(n_windows);
  out.volume_fit.resize(n_windows);
  out.rho.resize(n_windows);
  out.rho_pvalue.resize(n_windows);

  for_each_block(n_windows, kRollingBlock, threads,
                 [&](std::size_t, std::size_t w0, std::size_t w1) {
    // Window w covers increments [w, w + window).
    KahanSum ksx, ksxx, ksy, ksyy, ksxy;
    for (std::size_t k = w0; k < w0 + window; ++k) {
      ksx.add(x[k]);
      ksxx.add(x[k] * x[k]);
      ksy.add(y[k]);
      ksyy.add(y[k] * y[k]);
      ksxy.add(x[k] * y[k]);
    }
    double sx = ksx.sum, sxx = ksxx.sum, sy = ksy.sum, syy = ksyy.sum, sxy = ksxy.sum;

    for (std::size_t w = w0; w < w1; ++w) {
      if (w > w0) {
        const std::size_t drop = w - 1;
        const std::size_t take = w + window - 1;
        sx += x[take] - x[drop];
        sxx += x[take] * x[take] - x[drop] * x[drop];
        sy += y[take] - y[drop];
        syy += y[take] * y[take] - y[drop] * y[drop];
        sxy += x[take] * y[take] - x[drop] * y[drop];
      }

      const double mx = sx / n;
      const double my = sy / n;
      const double vx = std::max(0.0, (sxx - sx * mx) / nm1);
      const double vy = std::max(0.0, (syy - sy * my) / nm1);
      const double cxy = (sxy - sx * my) / nm1;

      const std::size_t anchor = w + window;
      GbmEstimate price = fit_from_moments(mx, std::sqrt(vx), dt_years);
      GbmEstimate volume = fit_from_moments(my, std::sqrt(vy), dt_years);
      price.window_start = volume.window_start = series.dates[w];
      price.window_end = volume.window_end = series.dates[anchor];
      price.n_obs = volume.n_obs = window;

      double rho = 0.0;
      double pval = 1.0;
      if (vx > 0.0 && vy > 0.0) {
        rho = std::clamp(cxy / std::sqrt(vx * vy), -1.0, 1.0);
        pval = correlation_p_value(rho, window);
      }

      out.dates[w] = series.dates[anchor];
      out.price_fit[w] = price;
      out.volume_fit[w] = volume;
      out.rho[w] = rho;
      out.rho_pvalue[w] = pval;
    }
  });

  return out;
}

}  // namespace volrisk
