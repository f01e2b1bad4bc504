#pragma once

#include "volrisk/date.hpp"
#include "volrisk/gbm_estimation.hpp"

namespace volrisk {

/// Split of the volume GBM fit into trading rate and drift component:
/// mu_vol = eta * psi, sigma_vol = eta * sigma_price, eta >= 0.
/// `degenerate` marks the no-trading limit sigma_vol = 0 (eta = 0, psi = 0).
struct VolumeDecomposition {
  double eta = 0.0;
  double psi = 0.0;
  bool degenerate = false;
};

struct PricesOfRisk {
  double market = 0.0;   // (mu - r) / sigma
  double volume = 0.0;   // (psi + rho sigma^2) / sigma
  double trading = 0.0;  // (mu - r + (psi + rho sigma^2) eta) / (sigma sqrt(1 + eta^2 + 2 rho eta))
};

struct WealthDynamics {
  double drift = 0.0;  // mu + (psi + rho sigma^2) eta, per year
  double vol = 0.0;    // sigma sqrt(1 + eta^2 + 2 rho eta), per sqrt-year
};

/// Parameters of the representative trader implied by the observed dynamics:
/// alpha_rms = sqrt(mu_alpha^2 + sigma_alpha^2) is the root-mean-square
/// risk-adjusted price of risk, mu_gamma the average risk aversion.
struct RepresentativeAgent {
  double mu_gamma = 0.0;
  double alpha_rms = 0.0;
};

/// Drift adjustments of the measure change that makes discounted price and
/// discounted invested wealth martingales (the eta factors on the volume leg
/// cancel).
struct GirsanovKernels {
  double price = 0.0;
  double volume = 0.0;
};

/// Every per-date derived quantity emitted by the pipeline.  All rates are
/// annualized; prices of risk are Sharpe-style per-sqrt-year quantities.
struct RiskMetricsPoint {
  Date date;
  double eta = 0.0;
  double psi = 0.0;
  double ratio_obs = 0.0;       // mu_vol / sigma_vol (0 when volume is degenerate)
  double ratio_merton = 0.0;    // (mu - r - sigma^2) / sigma
  double market_premium = 0.0;  // mu - r
  double volume_premium = 0.0;  // psi + rho sigma^2
  double market_por = 0.0;
  double volume_por = 0.0;
  double trading_por = 0.0;
  double mu_gamma = 0.0;
  double wealth_drift = 0.0;
  double wealth_vol = 0.0;
};

/// Throws ZeroPriceVolatility when price_fit.sigma <= 0.
VolumeDecomposition decompose_volume(const GbmEstimate& vol_fit, const GbmEstimate& price_fit);

/// (mu - r - sigma^2) / sigma; throws ZeroVolatility.
double merton_ratio(double mu, double r, double sigma);

/// mu_vol / sigma_vol; throws ZeroVolatility.
double observed_ratio(const GbmEstimate& vol_fit);

/// Throws ZeroVolatility (sigma <= 0) and DegenerateCombinedVolatility
/// (1 + eta^2 + 2 rho eta <= 0; reported, never clamped).
PricesOfRisk prices_of_risk(double mu, double r, double sigma, double psi, double rho,
                            double eta);

/// Average risk aversion 1 - (mu - r + (psi + rho sigma^2) eta) /
/// (sigma^2 (1 + eta^2 + 2 rho eta)).
double risk_aversion(double mu, double r, double sigma, double psi, double rho, double eta);

WealthDynamics wealth_dynamics(double mu, double sigma, double psi, double rho, double eta);

/// r + sigma_tilde (1 - mu_gamma) alpha_rms; throws NonPositiveSigmaTilde.
/// (impacted_drift(s) - r) / s is independent of s and equals the trading
/// price of risk.
double impacted_drift(double sigma_tilde, double r, double mu_gamma, double alpha_rms);

/// Solves the moment-matching system: alpha_rms = wealth volatility,
/// mu_gamma from risk_aversion; substituting back reproduces the observed
/// wealth drift as r + alpha_rms^2 (1 - mu_gamma).
RepresentativeAgent calibrate_representative_agent(double mu, double r, double sigma,
                                                   double psi, double rho, double eta);

/// Requires sigma > 0 and eta > 0 (a zero trading rate leaves the volume leg
/// with no volatility to reprice); throws ZeroVolatility.
GirsanovKernels girsanov_kernels(double mu, double r, double sigma, double psi, double rho,
                                 double eta);

/// Assembles the full per-date metrics row from one window's estimates.
/// `rho` is the correlation to use (per-window estimate or forced zero).
RiskMetricsPoint compute_risk_metrics(const Date& date, const GbmEstimate& price_fit,
                                      const GbmEstimate& vol_fit, double rho, double r);

}  // namespace volrisk
