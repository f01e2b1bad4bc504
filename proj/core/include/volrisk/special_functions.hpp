#pragma once

namespace volrisk {

/// Standard normal CDF, computed through erfc for full double accuracy in
/// both tails.
double normal_cdf(double x) noexcept;

/// Standard normal inverse CDF on p in (0,1).
/// Rational initial guess (Acklam 2003) polished with one Halley step against
/// normal_cdf; absolute error is < 1e-13 on p in [1e-300, 1-1e-16].
/// Returns +/-infinity at p = 1/0 and NaN outside [0,1].
double normal_quantile(double p) noexcept;

/// Regularized incomplete beta function I_x(a, b), a,b > 0, x in [0,1].
/// Continued-fraction evaluation (Lentz), switching to the symmetric form
/// when x > (a+1)/(a+b+2) for fast convergence.
double incomplete_beta(double a, double b, double x) noexcept;

/// Student-t CDF with nu > 0 degrees of freedom.
double student_t_cdf(double t, double nu) noexcept;

/// Two-sided Student-t tail probability P(|T_nu| >= |t|).
double student_t_two_sided_p(double t, double nu) noexcept;

/// Kolmogorov asymptotic survival function
///   Q(x) = 2 * sum_{j>=1} (-1)^{j-1} exp(-2 j^2 x^2),
/// the limiting null distribution of sqrt(n) * D_n.  Terms are accumulated
/// until they drop below 1e-12 in magnitude; the result is clamped to [0,1].
double kolmogorov_asymptotic_p(double x) noexcept;

}  // namespace volrisk
