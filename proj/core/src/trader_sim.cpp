#include "volrisk/trader_sim.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "volrisk/errors.hpp"
#include "volrisk/parallel.hpp"
#include "volrisk/rng.hpp"

namespace volrisk {

namespace {

constexpr std::size_t kXiBlock = 8192;
constexpr std::size_t kPathBlock = 64;
constexpr double kGammaUnityTol = 1e-12;
constexpr int kMaxResamples = 100;

double draw_unit_variance(SubstreamRng& rng, Dist dist) {
  return dist == Dist::normal ? rng.normal() : rng.uniform_unit_variance();
}

struct GammaDraw {
  double gamma = 0.0;
  double phi = 0.0;  // the accepted unit-variance draw, needed by the residual
};

// gamma draw with the gamma = 1 rejection rule.
GammaDraw draw_gamma(SubstreamRng& rng, const TraderPopulationSpec& spec,
                     std::size_t& resamples) {
  for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
    const double phi = draw_unit_variance(rng, spec.gamma_dist);
    const double gamma = spec.mu_gamma + spec.sigma_gamma * phi;
    if (std::fabs(1.0 - gamma) > kGammaUnityTol) return {gamma, phi};
    ++resamples;
    if (spec.sigma_gamma == 0.0) break;  // constant draw, resampling cannot help
  }
  throw Error(Errc::risk_aversion_unity, "gamma draws pinned at 1 (singular Merton fraction)");
}

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

// Per-block moment state, merged across blocks in index order (Chan's
// parallel variance update keeps M2 nonnegative by construction).
struct BlockMoments {
  std::size_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;
  KahanSum res;
  KahanSum res_sq;

  void push_xi(double xi) {
    ++n;
    const double delta = xi - mean;
    mean += delta / double(n);
    m2 += delta * (xi - mean);
  }
};

double alpha_squared_sum(const TraderPopulationSpec& spec) {
  return spec.mu_alpha * spec.mu_alpha + spec.sigma_alpha * spec.sigma_alpha;
}

struct XiDraw {
  double xi = 0.0;
  double res = 0.0;
};

// One trader's xi and expansion residual; the single source of truth for the
// draw layout (eps, gamma with rejection, then the Brownian increment).
XiDraw draw_xi(const TraderPopulationSpec& spec, std::size_t trader) {
  const double dt = spec.dt_years;
  SubstreamRng rng(spec.seed, trader);
  const double eps = draw_unit_variance(rng, spec.alpha_dist);
  std::size_t resamples = 0;
  const auto [gamma, phi] = draw_gamma(rng, spec, resamples);
  const double alpha = spec.mu_alpha + spec.sigma_alpha * eps;
  const double dw = std::sqrt(dt) * rng.normal();

  XiDraw d;
  d.xi = (spec.r + alpha * alpha * (0.5 - gamma)) * dt + alpha * dw;
  const double half_minus_mg = 0.5 - spec.mu_gamma;
  d.res = 2.0 * spec.mu_alpha * spec.sigma_alpha * eps * half_minus_mg * dt -
          spec.sigma_gamma * phi *
              (alpha_squared_sum(spec) + 2.0 * spec.mu_alpha * spec.sigma_alpha * eps) * dt +
          spec.sigma_alpha * spec.sigma_alpha * (eps * eps - 1.0) * half_minus_mg * dt;
  return d;
}

}  // namespace

void validate(const TraderPopulationSpec& spec) {
  if (spec.n_traders < 1) throw Error(Errc::invalid_config, "n_traders must be >= 1");
  if (spec.sigma_alpha < 0.0) throw Error(Errc::invalid_config, "sigma_alpha must be >= 0");
  if (spec.sigma_gamma < 0.0) throw Error(Errc::invalid_config, "sigma_gamma must be >= 0");
  if (!(spec.dt_years > 0.0)) throw Error(Errc::invalid_config, "dt_years must be > 0");
  if (spec.n_steps < 1) throw Error(Errc::invalid_config, "n_steps must be >= 1");
  if (!std::isfinite(spec.mu_alpha) || !std::isfinite(spec.mu_gamma) || !std::isfinite(spec.r)) {
    throw Error(Errc::invalid_config, "population parameters must be finite");
  }
}

double theory_mean_xi(const TraderPopulationSpec& spec) {
  return (spec.r + alpha_squared_sum(spec) * (0.5 - spec.mu_gamma)) * spec.dt_years;
}

double theory_var_xi(const TraderPopulationSpec& spec) {
  return alpha_squared_sum(spec) * spec.dt_years;
}

double theory_mean_xi_alt(const TraderPopulationSpec& spec) {
  const double s = spec.mu_alpha + spec.sigma_alpha;
  return (spec.r + s * s * (0.5 - spec.mu_gamma)) * spec.dt_years;
}

double theory_var_xi_alt(const TraderPopulationSpec& spec) {
  const double s = spec.mu_alpha + spec.sigma_alpha;
  return s * s * spec.dt_years;
}

PopulationDraw sample_population(const TraderPopulationSpec& spec) {
  validate(spec);
  PopulationDraw draw;
  draw.alpha.resize(spec.n_traders);
  draw.gamma.resize(spec.n_traders);
  std::size_t resamples = 0;
  for (std::size_t i = 0; i < spec.n_traders; ++i) {
    SubstreamRng rng(spec.seed, i);
    const double eps = draw_unit_variance(rng, spec.alpha_dist);
    draw.alpha[i] = spec.mu_alpha + spec.sigma_alpha * eps;
    draw.gamma[i] = draw_gamma(rng, spec, resamples).gamma;
  }
  draw.gamma_unity_resamples = resamples;
  return draw;
}

AggregationReport simulate_xi(const TraderPopulationSpec& spec, unsigned threads) {
  validate(spec);

  const std::size_t n_blocks = (spec.n_traders + kXiBlock - 1) / kXiBlock;
  std::vector<BlockMoments> blocks(n_blocks);

  for_each_block(spec.n_traders, kXiBlock, threads,
                 [&](std::size_t bi, std::size_t i0, std::size_t i1) {
    BlockMoments& bm = blocks[bi];
    for (std::size_t i = i0; i < i1; ++i) {
      const XiDraw d = draw_xi(spec, i);
      bm.push_xi(d.xi);
      bm.res.add(d.res);
      bm.res_sq.add(d.res * d.res);
    }
  });

  // Fixed-order merge makes the result independent of scheduling.
  std::size_t n = 0;
  double mean = 0.0, m2 = 0.0;
  KahanSum res_sum, res_sq_sum;
  for (const auto& bm : blocks) {
    if (bm.n == 0) continue;
    const double delta = bm.mean - mean;
    const std::size_t combined = n + bm.n;
    m2 += bm.m2 + delta * delta * double(n) * double(bm.n) / double(combined);
    mean += delta * double(bm.n) / double(combined);
    n = combined;
    res_sum.add(bm.res.sum);
    res_sq_sum.add(bm.res_sq.sum);
  }

  AggregationReport report;
  report.n_traders = spec.n_traders;
  report.sample_mean_xi = mean;
  report.sample_var_xi = n > 0 ? m2 / double(n) : 0.0;
  report.theory_mean_xi = theory_mean_xi(spec);
  report.theory_var_xi = theory_var_xi(spec);
  report.residual_mean = res_sum.sum / double(spec.n_traders);
  report.residual_sq_mean = res_sq_sum.sum / double(spec.n_traders);
  return report;
}

std::vector<double> sample_xi(const TraderPopulationSpec& spec) {
  validate(spec);
  std::vector<double> xs(spec.n_traders);
  for (std::size_t i = 0; i < spec.n_traders; ++i) xs[i] = draw_xi(spec, i).xi;
  return xs;
}

std::vector<AggregationReport> convergence_study(const TraderPopulationSpec& spec,
                                                 std::span<const std::size_t> n_grid,
                                                 unsigned threads) {
  validate(spec);
  if (!std::is_sorted(n_grid.begin(), n_grid.end())) {
    throw Error(Errc::invalid_config, "n_grid must be ascending");
  }
  std::vector<AggregationReport> reports;
  reports.reserve(n_grid.size());
  for (std::size_t n : n_grid) {
    TraderPopulationSpec s = spec;
    s.n_traders = n;
    reports.push_back(simulate_xi(s, threads));
  }
  return reports;
}

std::vector<TraderPath> simulate_trader_paths(const TraderPopulationSpec& spec,
                                              std::span<const double> mu_i,
                                              std::span<const double> sigma_i,
                                              unsigned threads) {
  validate(spec);
  if (mu_i.size() != spec.n_traders || sigma_i.size() != spec.n_traders) {
    throw Error(Errc::length_mismatch, "need one (mu, sigma) belief per trader");
  }
  for (std::size_t i = 0; i < sigma_i.size(); ++i) {
    if (!(sigma_i[i] > 0.0)) {
      throw Error(Errc::non_positive_sigma,
                  "sigma of trader " + std::to_string(i) + " must be > 0");
    }
  }

  const double dt = spec.dt_years;
  const double sqrt_dt = std::sqrt(dt);
  std::vector<TraderPath> paths(spec.n_traders);

  for_each_block(spec.n_traders, kPathBlock, threads,
                 [&](std::size_t, std::size_t i0, std::size_t i1) {
    for (std::size_t i = i0; i < i1; ++i) {
      SubstreamRng rng(spec.seed, i);
      // Same draw layout as sample_population: eps first (unused for paths,
      // beliefs are given), then gamma with the rejection rule.
      (void)draw_unit_variance(rng, spec.alpha_dist);
      std::size_t resamples = 0;
      double gamma = draw_gamma(rng, spec, resamples).gamma;

      TraderPath& path = paths[i];
      path.mu = mu_i[i];
      path.sigma = sigma_i[i];
      path.gamma = gamma;
      path.alpha = (mu_i[i] - spec.r) / (sigma_i[i] * (1.0 - gamma));

      const std::size_t len = spec.n_steps + 1;
      path.times.resize(len);
      path.wealth.resize(len);
      path.strategy.resize(len);
      path.riskfree_holding.resize(len);

      double x = 1.0;
      double fraction = (mu_i[i] - spec.r) / (sigma_i[i] * sigma_i[i] * (1.0 - gamma));
      for (std::size_t k = 0; k < len; ++k) {
        path.times[k] = double(k) * dt;
        path.wealth[k] = x;
        const double pi = fraction * x;
        path.strategy[k] = pi;
        path.riskfree_holding[k] = x - pi;
        if (!(x > 0.0)) path.wealth_positive = false;
        if (k + 1 == len) break;

        const double z = rng.normal();
        x = x + x * spec.r * dt + pi * ((mu_i[i] - spec.r) * dt + sigma_i[i] * sqrt_dt * z);

        if (spec.redraw_per_step) {
          gamma = draw_gamma(rng, spec, resamples).gamma;
          fraction = (mu_i[i] - spec.r) / (sigma_i[i] * sigma_i[i] * (1.0 - gamma));
        }
      }
    }
  });

  return paths;
}

std::vector<double> generator_path(double mu_alpha, double sigma_alpha, double mu_gamma,
                                   double r, double dt_years, std::size_t n_steps,
                                   std::uint64_t seed) {
  if (!(dt_years > 0.0)) {
    throw Error(Errc::invalid_config, "dt_years must be > 0");
  }
  const double a2 = mu_alpha * mu_alpha + sigma_alpha * sigma_alpha;
  const double log_drift = r + a2 * (0.5 - mu_gamma);  // GBM drift minus vol^2/2
  const double vol = std::sqrt(a2);
  const double sqrt_dt = std::sqrt(dt_years);

  SubstreamRng rng(seed, 0);
  std::vector<double> path(n_steps + 1);
  double log_pi = 0.0;
  path[0] = 1.0;
  for (std::size_t k = 1; k <= n_steps; ++k) {
    log_pi += log_drift * dt_years + vol * sqrt_dt * rng.normal();
    path[k] = std::exp(log_pi);
  }
  return path;
}

}  // namespace volrisk
