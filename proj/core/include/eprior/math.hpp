#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace eprior::math {

double normal_cdf(double z);
double normal_quantile(double p);

// Upper tail P(chi2_df > x), regularized incomplete gamma, rel. accuracy ~1e-12.
double chi_square_upper(double df, double x);

// Two-sided p-value of a |t| statistic with the given degrees of freedom.
double student_t_two_sided_p(double df, double abs_t);

double beta_cdf(double a, double b, double x);

// Pr(X > Y) for independent X~Beta(a1,b1), Y~Beta(a2,b2); adaptive quadrature
// of the integral of f_X * F_Y to absolute tolerance 1e-8.
double prob_beta_greater(double a1, double b1, double a2, double b2);

// Quantile with linear interpolation between order statistics (type 7).
// Sorts a copy; `quantile_sorted` assumes ascending input.
double quantile(std::vector<double> v, double q);
double quantile_sorted(std::span<const double> sorted, double q);

double mean(std::span<const double> v);
double sample_variance(std::span<const double> v);  // divisor n-1

}  // namespace eprior::math
