#pragma once

#include <iosfwd>
#include <vector>

#include "volrisk/analysis.hpp"
#include "volrisk/trader_sim.hpp"

namespace volrisk {

/// CSV emitters for every artifact table.  All numbers are written in the
/// shortest round-trip form, so files are byte-reproducible and re-ingest to
/// identical values.

/// `date,mu_price,sigma_price,mu_vol,sigma_vol,rho,rho_pvalue`
void write_estimates_csv(const WindowedEstimates& estimates, std::ostream& out);

/// `date,ks_stat_logvol,ks_p_logvol,ks_stat_logprice,ks_p_logprice`
void write_stat_tests_csv(const std::vector<KsRow>& rows, std::ostream& out);

/// `date,eta,psi,ratio_obs,ratio_merton,market_premium,volume_premium,
///  market_por,volume_por,trading_por,mu_gamma,wealth_drift,wealth_vol`
void write_metrics_csv(const std::vector<RiskMetricsPoint>& metrics, std::ostream& out);

/// `metric,segment_start,segment_end,intercept,std_error,n`
void write_segments_csv(const std::vector<SegmentSummary>& segments, std::ostream& out);

/// `date,observed,forecast,mode`
void write_forecast_csv(const std::vector<ForecastPoint>& points, std::ostream& out);

/// Single-row report at the population's trader count, sample and theoretical
/// columns side by side; the *_alt columns carry the alternative
/// (mu_alpha + sigma_alpha)^2 moment convention for comparison.
void write_aggregation_csv(const AggregationReport& report, const TraderPopulationSpec& spec,
                           std::ostream& out);

/// One row per trader count.
void write_convergence_csv(const std::vector<AggregationReport>& reports, std::ostream& out);

/// Long-format paths: `trader,step,time,wealth,strategy,riskfree_holding`.
void write_trader_paths_csv(const std::vector<TraderPath>& paths, std::ostream& out);

}  // namespace volrisk
