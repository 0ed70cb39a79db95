#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace cw {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double x) const { return lo <= x && x <= hi; }
  double width() const { return hi - lo; }
};

double mean(const std::vector<double>& xs);
double sample_sd(const std::vector<double>& xs);  // unbiased, 0 for size < 2
double median(std::vector<double> xs);

// mean +- 1.96 sd / sqrt(n)
Interval normal_ci95(const std::vector<double>& xs);

double normal_cdf(double z);

// Two-sided Kolmogorov-Smirnov statistic of xs against the normal with the
// given parameters.
double ks_statistic(std::vector<double> xs, double mu, double sigma);

// Lilliefors-adjusted p-value: both parameters are refitted on every
// Monte-Carlo replicate, replicates are generated by a counter RNG keyed on
// mc_seed so the value is deterministic.
double lilliefors_p_value(const std::vector<double>& xs, std::uint64_t mc_seed, int replicates = 2000);

// Upper tail of the chi-square distribution with k degrees of freedom.
double chi2_sf(double x, int k);

// log C(n, k)
double log_binomial(std::int64_t n, std::int64_t k);
// P(|S_n| = d) for the simple +-1 walk (exact up to double rounding).
double binomial_abs_pmf(std::int64_t n, std::int64_t d);
// E |S_n| of the simple +-1 walk.
double binomial_abs_mean(std::int64_t n);

// Total variation distance between two finitely supported measures.
double total_variation(const std::map<int, double>& p, const std::map<int, double>& q);

// Least-squares slope of y against x.
double ls_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace cw
