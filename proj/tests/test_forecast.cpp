#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "oracles.hpp"
#include "synthetic.hpp"
#include "volrisk/errors.hpp"
#include "volrisk/forecast.hpp"
#include "volrisk/gbm_estimation.hpp"

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

AlignedSeries gbm_series(std::size_t n, double mu, double sigma, std::uint64_t seed) {
  AlignedSeries s;
  s.dates = synthetic::make_dates(n);
  s.prices = synthetic::gbm_path(n, mu, sigma, kDt, seed);
  s.volumes = synthetic::gbm_path(n, 0.1, 0.5, kDt, seed + 1);
  s.risk_free.assign(n, 0.02);
  return s;
}

}  // namespace

TEST_CASE("one_day_ahead: reconstruction closes on the observed prices") {
  const auto series = gbm_series(400, 0.08, 0.2, 51);
  const auto estimates = rolling_fit(series, 125, kDt);
  const auto points = one_day_ahead(series, estimates, ForecastMode::reconstruction, kDt);
  REQUIRE(points.size() == estimates.size() - 1);  // last anchor has no successor
  for (const auto& p : points) {
    CHECK(p.forecast == doctest::Approx(p.observed).epsilon(1e-10));
    CHECK(p.forecast > 0.0);
  }
}

TEST_CASE("one_day_ahead: point mode with zero drift forecasts the previous close") {
  const auto series = gbm_series(140, 0.08, 0.2, 52);
  auto estimates = rolling_fit(series, 125, kDt);
  for (auto& fit : estimates.price_fit) fit.mu = 0.0;
  const auto points = one_day_ahead(series, estimates, ForecastMode::point, kDt);
  const std::size_t first = 125;
  for (std::size_t k = 0; k < points.size(); ++k) {
    CHECK(points[k].forecast == doctest::Approx(series.prices[first + k]).epsilon(1e-14));
    CHECK(points[k].date == series.dates[first + k + 1]);
  }
}

TEST_CASE("one_day_ahead: point-mode MAE matches the lognormal closed form") {
  // E|exp(sigma sqrt(dt) Z - sigma^2 dt / 2) - 1| = 2 (2 Phi(a/2) - 1),
  // a = sigma sqrt(dt): 0.010052 at sigma = 0.2, dt = 1/252.
  const std::size_t n = 10125;
  const auto series = gbm_series(n, 0.08, 0.2, 53);
  const auto estimates = rolling_fit(series, 125, kDt);
  const auto points = one_day_ahead(series, estimates, ForecastMode::point, kDt);
  const auto diag = forecast_diagnostics(points);

  const double a = 0.2 * std::sqrt(kDt);
  const double expected = 2.0 * (2.0 * oracles::normal_cdf(a / 2.0) - 1.0);
  CHECK(expected == doctest::Approx(0.01005).epsilon(1e-3));
  CHECK(diag.mae_rel == doctest::Approx(expected).epsilon(0.05));
}

TEST_CASE("one_day_ahead: coverage errors") {
  const auto series = gbm_series(200, 0.08, 0.2, 54);
  const auto estimates = rolling_fit(series, 125, kDt);

  // A series on a different calendar cannot host these anchors.
  AlignedSeries other = gbm_series(200, 0.08, 0.2, 55);
  other.dates = synthetic::make_dates(200, Date{1995, 1, 1});
  CHECK(code_of([&] { one_day_ahead(other, estimates, ForecastMode::point, kDt); }) ==
        Errc::coverage_gap);

  // A truncated series loses the anchor dates entirely.
  AlignedSeries truncated = series;
  truncated.dates.resize(100);
  truncated.prices.resize(100);
  truncated.volumes.resize(100);
  truncated.risk_free.resize(100);
  CHECK(code_of([&] { one_day_ahead(truncated, estimates, ForecastMode::point, kDt); }) ==
        Errc::coverage_gap);

  WindowedEstimates empty;
  CHECK(code_of([&] { one_day_ahead(series, empty, ForecastMode::point, kDt); }) ==
        Errc::coverage_gap);
}

TEST_CASE("forecast_diagnostics: perfect forecasts") {
  std::vector<ForecastPoint> points;
  double price = 100.0;
  for (int k = 0; k < 10; ++k) {
    price *= 1.01;
    points.push_back({Date{2020, 1, std::uint8_t(k + 1)}, price, price,
                      ForecastMode::reconstruction});
  }
  const auto diag = forecast_diagnostics(points);
  CHECK(diag.mae_rel == 0.0);
  CHECK(diag.rmse_rel == 0.0);
  CHECK(diag.hit_rate == 1.0);
}

TEST_CASE("forecast_diagnostics: flat forecasts never score a hit") {
  // forecast[k] = previous observed close while prices rise strictly
  std::vector<ForecastPoint> points;
  double price = 100.0;
  for (int k = 0; k < 10; ++k) {
    const double prev = price;
    price += 1.0;
    points.push_back(
        {Date{2020, 1, std::uint8_t(k + 1)}, price, prev, ForecastMode::point});
  }
  // points[k].forecast == points[k-1].observed exactly
  for (std::size_t k = 1; k < points.size(); ++k) {
    REQUIRE(points[k].forecast == points[k - 1].observed);
  }
  const auto diag = forecast_diagnostics(points);
  CHECK(diag.hit_rate == 0.0);
}

TEST_CASE("forecast_diagnostics: random walk point forecasts hit about half the time") {
  const std::size_t n = 2500;
  const auto series = gbm_series(n, 0.0, 0.2, 56);
  const auto estimates = rolling_fit(series, 125, kDt);
  const auto points = one_day_ahead(series, estimates, ForecastMode::point, kDt);
  const auto diag = forecast_diagnostics(points);
  const double slack = 3.0 / std::sqrt(double(points.size()));
  CHECK(diag.hit_rate > 0.5 - slack);
  CHECK(diag.hit_rate < 0.5 + slack);
}

TEST_CASE("forecast_diagnostics: empty input") {
  CHECK(code_of([] { forecast_diagnostics({}); }) == Errc::empty_input);
}

TEST_CASE("property: point forecasts are invariant under price rescaling") {
  const auto series = gbm_series(300, 0.08, 0.2, 57);
  AlignedSeries scaled = series;
  const double c = 37.5;
  for (auto& p : scaled.prices) p *= c;

  const auto est1 = rolling_fit(series, 125, kDt);
  const auto est2 = rolling_fit(scaled, 125, kDt);
  const auto pts1 = one_day_ahead(series, est1, ForecastMode::point, kDt);
  const auto pts2 = one_day_ahead(scaled, est2, ForecastMode::point, kDt);
  REQUIRE(pts1.size() == pts2.size());
  for (std::size_t k = 0; k < pts1.size(); ++k) {
    CHECK(pts2[k].forecast == doctest::Approx(c * pts1[k].forecast).epsilon(1e-9));
  }

  const auto d1 = forecast_diagnostics(pts1);
  const auto d2 = forecast_diagnostics(pts2);
  CHECK(d1.mae_rel == doctest::Approx(d2.mae_rel).epsilon(1e-9));
  CHECK(d1.hit_rate == doctest::Approx(d2.hit_rate));
}

TEST_CASE("property: MAE and RMSE are permutation invariant") {
  const auto series = gbm_series(300, 0.08, 0.2, 58);
  const auto estimates = rolling_fit(series, 125, kDt);
  auto points = one_day_ahead(series, estimates, ForecastMode::point, kDt);
  const auto base = forecast_diagnostics(points);

  std::mt19937_64 rng(4);
  std::shuffle(points.begin(), points.end(), rng);
  const auto shuffled = forecast_diagnostics(points);
  CHECK(base.mae_rel == doctest::Approx(shuffled.mae_rel).epsilon(1e-12));
  CHECK(base.rmse_rel == doctest::Approx(shuffled.rmse_rel).epsilon(1e-12));
}

TEST_CASE("forecast mode names round-trip; bad names are rejected") {
  CHECK(forecast_mode_from_string("reconstruction") == ForecastMode::reconstruction);
  CHECK(forecast_mode_from_string("point") == ForecastMode::point);
  CHECK(std::string(to_string(ForecastMode::point)) == "point");
  CHECK(code_of([] { forecast_mode_from_string("oracle"); }) == Errc::invalid_config);
}
