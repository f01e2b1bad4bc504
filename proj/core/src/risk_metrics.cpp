#include "volrisk/risk_metrics.hpp"

#include <cmath>
#include <string>

#include "volrisk/errors.hpp"

namespace volrisk {

namespace {

// 1 + eta^2 + 2 rho eta; <= 0 only at rho = -1, eta = 1 exactly.
double combined_volatility_factor(double rho, double eta) {
  const double c = 1.0 + eta * eta + 2.0 * rho * eta;
  if (!(c > 0.0)) {
    throw Error(Errc::degenerate_combined_volatility,
                "1 + eta^2 + 2 rho eta = " + std::to_string(c));
  }
  return c;
}

void require_sigma(double sigma) {
  if (!(sigma > 0.0)) {
    throw Error(Errc::zero_volatility, "sigma must be > 0, got " + std::to_string(sigma));
  }
}

}  // namespace

VolumeDecomposition decompose_volume(const GbmEstimate& vol_fit, const GbmEstimate& price_fit) {
  if (!(price_fit.sigma > 0.0)) {
    throw Error(Errc::zero_price_volatility, "price volatility must be > 0");
  }
  VolumeDecomposition d;
  d.eta = vol_fit.sigma / price_fit.sigma;
  if (d.eta > 0.0) {
    d.psi = vol_fit.mu / d.eta;
  } else {
    d.psi = 0.0;
    d.degenerate = true;
  }
  return d;
}

double merton_ratio(double mu, double r, double sigma) {
  require_sigma(sigma);
  return (mu - r - sigma * sigma) / sigma;
}

double observed_ratio(const GbmEstimate& vol_fit) {
  if (!(vol_fit.sigma > 0.0)) {
    throw Error(Errc::zero_volatility, "volume volatility must be > 0");
  }
  return vol_fit.mu / vol_fit.sigma;
}

PricesOfRisk prices_of_risk(double mu, double r, double sigma, double psi, double rho,
                            double eta) {
  require_sigma(sigma);
  const double c = combined_volatility_factor(rho, eta);
  PricesOfRisk por;
  por.market = (mu - r) / sigma;
  por.volume = (psi + rho * sigma * sigma) / sigma;
  por.trading = (mu - r + (psi + rho * sigma * sigma) * eta) / (sigma * std::sqrt(c));
  return por;
}

double risk_aversion(double mu, double r, double sigma, double psi, double rho, double eta) {
  require_sigma(sigma);
  const double c = combined_volatility_factor(rho, eta);
  return 1.0 - (mu - r + (psi + rho * sigma * sigma) * eta) / (sigma * sigma * c);
}

WealthDynamics wealth_dynamics(double mu, double sigma, double psi, double rho, double eta) {
  require_sigma(sigma);
  const double c = combined_volatility_factor(rho, eta);
  WealthDynamics wd;
  wd.drift = mu + (psi + rho * sigma * sigma) * eta;
  wd.vol = sigma * std::sqrt(c);
  return wd;
}

double impacted_drift(double sigma_tilde, double r, double mu_gamma, double alpha_rms) {
  if (!(sigma_tilde > 0.0)) {
    throw Error(Errc::non_positive_sigma_tilde, "sigma_tilde must be > 0");
  }
  return r + sigma_tilde * (1.0 - mu_gamma) * alpha_rms;
}

RepresentativeAgent calibrate_representative_agent(double mu, double r, double sigma,
                                                   double psi, double rho, double eta) {
  require_sigma(sigma);
  const double c = combined_volatility_factor(rho, eta);
  RepresentativeAgent agent;
  agent.alpha_rms = sigma * std::sqrt(c);
  agent.mu_gamma = 1.0 - (mu - r + (psi + rho * sigma * sigma) * eta) / (sigma * sigma * c);
  return agent;
}

GirsanovKernels girsanov_kernels(double mu, double r, double sigma, double psi, double rho,
                                 double eta) {
  require_sigma(sigma);
  if (!(eta > 0.0)) {
    throw Error(Errc::zero_volatility, "trading rate eta must be > 0; the volume leg has no "
                                       "volatility to reprice");
  }
  GirsanovKernels k;
  k.price = (mu - r) / sigma;
  k.volume = (psi + rho * sigma * sigma) / sigma;
  return k;
}

RiskMetricsPoint compute_risk_metrics(const Date& date, const GbmEstimate& price_fit,
                                      const GbmEstimate& vol_fit, double rho, double r) {
  const auto decomp = decompose_volume(vol_fit, price_fit);
  const double mu = price_fit.mu;
  const double sigma = price_fit.sigma;

  RiskMetricsPoint p;
  p.date = date;
  p.eta = decomp.eta;
  p.psi = decomp.psi;
  p.ratio_obs = decomp.degenerate ? 0.0 : observed_ratio(vol_fit);
  p.ratio_merton = merton_ratio(mu, r, sigma);
  p.market_premium = mu - r;
  p.volume_premium = decomp.psi + rho * sigma * sigma;

  const auto por = prices_of_risk(mu, r, sigma, decomp.psi, rho, decomp.eta);
  p.market_por = por.market;
  p.volume_por = por.volume;
  p.trading_por = por.trading;
  p.mu_gamma = risk_aversion(mu, r, sigma, decomp.psi, rho, decomp.eta);

  const auto wd = wealth_dynamics(mu, sigma, decomp.psi, rho, decomp.eta);
  p.wealth_drift = wd.drift;
  p.wealth_vol = wd.vol;
  return p;
}

}  // namespace volrisk
