#pragma once

#include <map>
#include <string>
#include <vector>

#include "stats.hpp"
#include "walk.hpp"

namespace cw {

struct DriftReport {
  double lambda_hat = 0.0;
  Interval ci95;
  bool has_ci = false;  // false for a single trial
  std::vector<std::pair<std::int64_t, double>> per_n_means;
  bool has_components = false;  // building backend: Weyl-vector drift
  double lambda_a = 0.0, lambda_b = 0.0;
  Interval ci_a, ci_b;
  std::int64_t horizon = 0;
  std::int64_t trials = 0;
};
DriftReport estimate_drift(const std::vector<WalkTrace>& traces);

struct CltReport {
  std::int64_t horizon = 0;
  std::vector<double> samples;  // (d(Z_n o, o) - n lambda) / sqrt(n)
  double sigma_hat = 0.0;
  double ks_stat = 0.0;
  double ks_p_value = 0.0;
  bool degenerate = false;  // all samples equal; no test run
};
CltReport clt_harness(const std::vector<WalkTrace>& traces, double lambda_hat, std::uint64_t mc_seed);

struct ProportionSeries {
  std::vector<std::int64_t> ns;
  std::vector<double> fractions;
};
// Fraction of trials whose element is certified, per checkpoint; traces must
// have been run with certification enabled.
ProportionSeries contracting_proportion(const std::vector<WalkTrace>& traces);

struct HittingReport {
  std::string basepoint;
  std::map<int, double> measure;           // flag id -> frequency over stabilized trials
  std::vector<std::int64_t> stabilization_n;  // per trial, -1 when unstable
  std::vector<std::int64_t> unstable_trials;
  double tv_residual = 0.0;                // TV(mu * nu_hat, nu_hat)
  std::int64_t trials = 0;
  std::string method;
};
// Runs the building walk of cfg and collects the stabilized germ measure at
// the standard vertex; stabilization means a constant full germ over the last
// `window` checkpoints. Throws if more than 5% of trials fail to stabilize.
HittingReport hitting_measure(const WalkConfig& cfg, int window = 3);

struct BirkhoffReport {
  bool symmetric_measure = true;  // warning flag when false
  std::map<int, double> averages;  // flag id -> mean over trials of time spent in the cylinder
  std::int64_t n = 0;
  std::int64_t trials = 0;
};
// (1/n) |{k <= n : germ(o, Z_k^-1 o) = c}| for every chamber c, averaged over
// trials; walks start at the identity vertex.
BirkhoffReport birkhoff_cylinder_averages(const WalkConfig& cfg);

struct OppositePairReport {
  std::vector<std::int64_t> ns;
  std::vector<double> fractions;  // fraction of pairs with opposite germs, per checkpoint
  std::int64_t pairs = 0;
};
// Pairs trace i with trace n_pairs + i from an independent range of trials.
OppositePairReport opposite_pair_frequency(const WalkConfig& cfg, std::int64_t n_pairs);

struct TrackingReport {
  std::vector<std::int64_t> ns;
  std::vector<double> median_errors;  // median over trials of d(Z_n o, gamma(n)) / n
  double lambda_a = 0.0, lambda_b = 0.0;
  bool degenerate_direction = false;  // a drift component vanished; no errors computed
  std::int64_t trials_used = 0;
};
// Tracking error against the sector ray gamma(n) = sector_point(germ,
// (floor(a n), floor(b n))) using each trace's own stabilized germ and the
// pooled component drift.
TrackingReport sublinear_tracking(const WalkConfig& cfg);

struct FirstHyperbolicReport {
  std::vector<std::int64_t> times;  // per trial, -1 when never certified
  std::int64_t horizon = 0;
  std::int64_t absent = 0;
  double median_time = 0.0;  // over the finite times
};
// Least checkpoint n at which Z_n carries a hyperbolicity certificate at some
// vertex of the radius-2 ball around the basepoint.
FirstHyperbolicReport first_hyperbolic_times(const WalkConfig& cfg, bool scan_ball = true);

}  // namespace cw
