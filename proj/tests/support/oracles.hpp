// Test-side oracles, kept independent of the library implementation paths
// they check: boost::math provides the high-precision distribution values,
// and the Kolmogorov series below is typed out separately from the one in
// core (long double accumulation, explicit sign variable).
#pragma once

#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/students_t.hpp>

#include <cmath>
#include <cstdint>
#include <vector>

namespace oracles {

inline double t_cdf(double t, double df) {
  boost::math::students_t dist(df);
  return boost::math::cdf(dist, t);
}

inline double t_two_sided_p(double t, double df) {
  boost::math::students_t dist(df);
  return 2.0 * boost::math::cdf(dist, -std::fabs(t));
}

inline double normal_quantile(double p) {
  boost::math::normal dist;
  return boost::math::quantile(dist, p);
}

inline double normal_cdf(double x) {
  boost::math::normal dist;
  return boost::math::cdf(dist, x);
}

// Kolmogorov asymptotic survival function, independently coded:
// Q(x) = 2 sum_{j>=1} (-1)^{j-1} exp(-2 j^2 x^2).
inline double kolmogorov_series(double x) {
  if (x <= 0.0) return 1.0;
  long double sum = 0.0L;
  int sign = +1;
  for (int j = 1; j <= 100000; ++j) {
    const long double term = std::exp(-2.0L * j * j * (long double)(x) * x);
    if (term < 1e-18L) break;
    sum += sign * term;
    sign = -sign;
  }
  const double q = (double)(2.0L * sum);
  return q < 0.0 ? 0.0 : (q > 1.0 ? 1.0 : q);
}

// Brute-force forward-fill: the latest observation at or before `when`,
// else the first one.  Quadratic on purpose.
template <typename Rec, typename DateT>
double forward_fill_lookup(const std::vector<Rec>& recs, const DateT& when) {
  double value = recs.front().annual_yield;
  bool found = false;
  for (const auto& r : recs) {
    if (r.date <= when && (!found || true)) {
      value = r.annual_yield;
      found = true;
    }
    if (r.date > when) break;
  }
  return value;
}

}  // namespace oracles
