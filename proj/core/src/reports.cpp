#include "volrisk/reports.hpp"

#include <ostream>

#include "volrisk/csv.hpp"

namespace volrisk {

namespace {

std::ostream& put(std::ostream& out, double v) {
  return out << csv::format_double(v);
}

}  // namespace

void write_estimates_csv(const WindowedEstimates& estimates, std::ostream& out) {
  out << "date,mu_price,sigma_price,mu_vol,sigma_vol,rho,rho_pvalue\n";
  for (std::size_t w = 0; w < estimates.size(); ++w) {
    out << to_string(estimates.dates[w]) << ',';
    put(out, estimates.price_fit[w].mu) << ',';
    put(out, estimates.price_fit[w].sigma) << ',';
    put(out, estimates.volume_fit[w].mu) << ',';
    put(out, estimates.volume_fit[w].sigma) << ',';
    put(out, estimates.rho[w]) << ',';
    put(out, estimates.rho_pvalue[w]) << '\n';
  }
}

void write_stat_tests_csv(const std::vector<KsRow>& rows, std::ostream& out) {
  out << "date,ks_stat_logvol,ks_p_logvol,ks_stat_logprice,ks_p_logprice\n";
  for (const auto& row : rows) {
    out << to_string(row.date) << ',';
    put(out, row.ks_stat_logvol) << ',';
    put(out, row.ks_p_logvol) << ',';
    put(out, row.ks_stat_logprice) << ',';
    put(out, row.ks_p_logprice) << '\n';
  }
}

void write_metrics_csv(const std::vector<RiskMetricsPoint>& metrics, std::ostream& out) {
  out << "date,eta,psi,ratio_obs,ratio_merton,market_premium,volume_premium,"
         "market_por,volume_por,trading_por,mu_gamma,wealth_drift,wealth_vol\n";
  for (const auto& p : metrics) {
    out << to_string(p.date) << ',';
    put(out, p.eta) << ',';
    put(out, p.psi) << ',';
    put(out, p.ratio_obs) << ',';
    put(out, p.ratio_merton) << ',';
    put(out, p.market_premium) << ',';
    put(out, p.volume_premium) << ',';
    put(out, p.market_por) << ',';
    put(out, p.volume_por) << ',';
    put(out, p.trading_por) << ',';
    put(out, p.mu_gamma) << ',';
    put(out, p.wealth_drift) << ',';
    put(out, p.wealth_vol) << '\n';
  }
}

void write_segments_csv(const std::vector<SegmentSummary>& segments, std::ostream& out) {
  out << "metric,segment_start,segment_end,intercept,std_error,n\n";
  for (const auto& s : segments) {
    out << s.metric << ',' << to_string(s.start) << ',' << to_string(s.end) << ',';
    put(out, s.fit.intercept) << ',';
    put(out, s.fit.std_error) << ',' << s.fit.n << '\n';
  }
}

void write_forecast_csv(const std::vector<ForecastPoint>& points, std::ostream& out) {
  out << "date,observed,forecast,mode\n";
  for (const auto& p : points) {
    out << to_string(p.date) << ',';
    put(out, p.observed) << ',';
    put(out, p.forecast) << ',' << to_string(p.mode) << '\n';
  }
}

namespace {

void write_report_cells(const AggregationReport& r, std::ostream& out) {
  out << r.n_traders << ',';
  put(out, r.sample_mean_xi) << ',';
  put(out, r.theory_mean_xi) << ',';
  put(out, r.sample_var_xi) << ',';
  put(out, r.theory_var_xi) << ',';
  put(out, r.residual_mean) << ',';
  put(out, r.residual_sq_mean);
}

}  // namespace

void write_aggregation_csv(const AggregationReport& report, const TraderPopulationSpec& spec,
                           std::ostream& out) {
  out << "n_traders,sample_mean_xi,theory_mean_xi,sample_var_xi,theory_var_xi,"
         "residual_mean,residual_sq_mean,theory_mean_xi_alt,theory_var_xi_alt\n";
  write_report_cells(report, out);
  out << ',';
  put(out, theory_mean_xi_alt(spec)) << ',';
  put(out, theory_var_xi_alt(spec)) << '\n';
}

void write_convergence_csv(const std::vector<AggregationReport>& reports, std::ostream& out) {
  out << "n_traders,sample_mean_xi,theory_mean_xi,sample_var_xi,theory_var_xi,"
         "residual_mean,residual_sq_mean,abs_mean_error\n";
  for (const auto& r : reports) {
    write_report_cells(r, out);
    out << ',';
    const double err = r.sample_mean_xi - r.theory_mean_xi;
    put(out, err < 0 ? -err : err) << '\n';
  }
}

void write_trader_paths_csv(const std::vector<TraderPath>& paths, std::ostream& out) {
  out << "trader,step,time,wealth,strategy,riskfree_holding\n";
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const auto& p = paths[i];
    for (std::size_t k = 0; k < p.times.size(); ++k) {
      out << i << ',' << k << ',';
      put(out, p.times[k]) << ',';
      put(out, p.wealth[k]) << ',';
      put(out, p.strategy[k]) << ',';
      put(out, p.riskfree_holding[k]) << '\n';
    }
  }
}

}  // namespace volrisk
