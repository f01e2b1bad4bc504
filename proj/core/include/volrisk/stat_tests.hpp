#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace volrisk {

/// Reported p-values are floored at this value ("< 1e-15") so downstream
/// log-scale plots never see an exact zero.
inline constexpr double kPValueFloor = 1e-15;

struct KsResult {
  double statistic = 0.0;  // sup-norm distance, in [0,1]
  double p_value = 1.0;    // in [0,1]
  std::size_t n = 0;
};

struct PearsonResult {
  double rho = 0.0;
  double p_value = 1.0;
};

/// Intercept-only linear regression: the intercept is the sample mean, its
/// standard error the sample SD (n-1 divisor) over sqrt(n).
struct InterceptFit {
  double intercept = 0.0;
  double std_error = 0.0;
  std::size_t n = 0;
};

double sample_mean(std::span<const double> xs);

/// Unbiased (n-1 divisor) sample standard deviation.
double sample_sd(std::span<const double> xs);

/// One-sample Kolmogorov-Smirnov normality test.  The sample is standardized
/// internally (subtract mean, divide by SD), so the test is invariant under
/// affine transforms; the p-value comes from the asymptotic Kolmogorov
/// distribution Q(sqrt(n) * D).  No small-sample or parameter-estimation
/// (Lilliefors) correction is applied.
/// Requires n >= 8; throws TooShort, ZeroVariance.
KsResult ks_normal(std::span<const double> sample);

/// Pearson correlation with the two-sided p-value from
/// t = rho * sqrt((n-2)/(1-rho^2)) against Student-t with n-2 dof.
/// Requires equal lengths n >= 4 and both inputs nonconstant;
/// throws LengthMismatch, TooShort, ZeroVariance.
PearsonResult pearson_test(std::span<const double> x, std::span<const double> y);

/// Two-sided p-value for a sample correlation at sample size n (n >= 3).
/// Shared by pearson_test and the rolling estimator.
double correlation_p_value(double rho, std::size_t n);

/// Requires n >= 2; throws TooShort.
InterceptFit intercept_regression(std::span<const double> values);

/// (theoretical, empirical) normal QQ pairs of the standardized sample,
/// ordered by theoretical quantile; theoretical quantile k (1-based) is the
/// normal inverse CDF at (k - 0.5)/n.
/// Requires n >= 8; throws TooShort, ZeroVariance.
std::vector<std::pair<double, double>> qq_table(std::span<const double> sample);

}  // namespace volrisk
