#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "volrisk/gbm_estimation.hpp"
#include "volrisk/market_data.hpp"
#include "volrisk/stat_tests.hpp"
#include "volrisk/trader_sim.hpp"

namespace {

constexpr double kDt = 1.0 / 252.0;

volrisk::AlignedSeries make_series(std::size_t n) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> normal(0.0, 1.0);
  volrisk::AlignedSeries s;
  s.dates.resize(n);
  volrisk::Date d{1990, 1, 1};
  for (std::size_t i = 0; i < n; ++i) {
    s.dates[i] = d;
    if (++d.day > 28) {
      d.day = 1;
      if (++d.month > 12) {
        d.month = 1;
        ++d.year;
      }
    }
  }
  s.prices.resize(n);
  s.volumes.resize(n);
  s.risk_free.assign(n, 0.02);
  double lp = 4.6, lv = 13.8;
  for (std::size_t i = 0; i < n; ++i) {
    lp += 0.0126 * normal(rng);
    lv += 0.0378 * normal(rng);
    s.prices[i] = std::exp(lp);
    s.volumes[i] = std::exp(lv);
  }
  return s;
}

void BM_FitGbm(benchmark::State& state) {
  const auto series = make_series(std::size_t(state.range(0)) + 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(volrisk::fit_gbm(series.prices, kDt));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FitGbm)->Range(128, 1 << 14)->Complexity();

void BM_RollingFit(benchmark::State& state) {
  const auto series = make_series(std::size_t(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(volrisk::rolling_fit(series, 125, kDt, 1));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RollingFit)->Range(1 << 10, 1 << 17)->Complexity();

void BM_KsNormal(benchmark::State& state) {
  std::mt19937_64 rng(9);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> sample(std::size_t(state.range(0)));
  for (auto& v : sample) v = normal(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(volrisk::ks_normal(sample));
  }
}
BENCHMARK(BM_KsNormal)->Arg(126)->Arg(1009);

void BM_SimulateXi(benchmark::State& state) {
  volrisk::TraderPopulationSpec spec;
  spec.n_traders = std::size_t(state.range(0));
  spec.mu_alpha = 0.5;
  spec.sigma_alpha = 0.1;
  spec.mu_gamma = 0.5;
  spec.sigma_gamma = 0.1;
  spec.r = 0.02;
  spec.dt_years = kDt;
  spec.seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(volrisk::simulate_xi(spec, 1));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SimulateXi)->Range(1 << 10, 1 << 17)->Complexity();

void BM_TraderPaths(benchmark::State& state) {
  volrisk::TraderPopulationSpec spec;
  spec.n_traders = std::size_t(state.range(0));
  spec.mu_gamma = 0.0;
  spec.r = 0.02;
  spec.dt_years = kDt;
  spec.n_steps = 252;
  spec.seed = 2;
  const std::vector<double> mu(spec.n_traders, 0.10);
  const std::vector<double> sigma(spec.n_traders, 0.20);
  for (auto _ : state) {
    benchmark::DoNotOptimize(volrisk::simulate_trader_paths(spec, mu, sigma, 1));
  }
}
BENCHMARK(BM_TraderPaths)->Arg(64)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
