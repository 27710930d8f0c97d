#pragma once

#include <vector>

// Direct-formula reference statistics with hand-rolled special functions
// (series/continued-fraction incomplete gamma and beta), kept independent of
// the boost-backed implementation they verify.
namespace oracle {

double norm_cdf(double z);
double incomplete_gamma_q(double a, double x);   // regularized upper
double incomplete_beta(double a, double b, double x);  // regularized lower
double chi2_sf(double x, double df);
double f_sf(double f, double df1, double df2);
double t_two_sided(double t, double df);
double beta_sf(double x, double a, double b);

struct StatP {
    double statistic = 0.0;
    double p = 0.0;
};

using Groups = std::vector<std::vector<double>>;

StatP anova(const Groups& groups);
StatP kruskal_wallis(const Groups& groups);
StatP mann_whitney(const std::vector<double>& a, const std::vector<double>& b);
StatP cochran(const Groups& groups);

// rank of x among pooled values, computed by counting (no sort)
double counting_rank(const std::vector<double>& pooled, double x);

}  // namespace oracle
