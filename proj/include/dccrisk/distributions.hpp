#pragma once

#include <Eigen/Dense>

namespace dccrisk {

// Standard normal density, CDF, and inverse CDF. The quantile uses a
// rational approximation polished by Halley steps and is accurate to
// close to machine precision over (0, 1).
double normal_pdf(double x);
double normal_cdf(double x);
double normal_quantile(double p);

// Student t with dof degrees of freedom (location 0, scale 1).
double student_t_pdf(double x, double dof);
double student_t_cdf(double x, double dof);
double student_t_quantile(double p, double dof);

// Regularized incomplete gamma P(a, x) and upper tail Q(a, x) = 1 - P.
double gamma_p(double a, double x);
double gamma_q(double a, double x);

// Regularized incomplete beta I_x(a, b).
double incomplete_beta(double a, double b, double x);

// Upper tail of the chi-squared distribution with dof degrees of freedom.
double chi_squared_sf(double x, double dof);

// Sample quantile with linear interpolation between order statistics
// (h = (m - 1) p convention). Input need not be sorted.
double empirical_quantile(const Eigen::VectorXd& sample, double p);

// Mean of the observations at or below the threshold.
double tail_mean(const Eigen::VectorXd& sample, double threshold);

}  // namespace dccrisk
