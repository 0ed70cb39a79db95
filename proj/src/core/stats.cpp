#include "stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rng.hpp"

namespace cw {

double mean(const std::vector<double>& xs) {
  if (xs.empty()) throw std::invalid_argument("mean of empty sample");
  double s = 0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

double sample_sd(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  double m = mean(xs), s = 0;
  for (double x : xs) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(xs.size() - 1));
}

double median(std::vector<double> xs) {
  if (xs.empty()) throw std::invalid_argument("median of empty sample");
  std::sort(xs.begin(), xs.end());
  std::size_t n = xs.size();
  return (n % 2 == 1) ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

Interval normal_ci95(const std::vector<double>& xs) {
  double m = mean(xs);
  double half = 1.959963984540054 * sample_sd(xs) / std::sqrt(static_cast<double>(xs.size()));
  return Interval{m - half, m + half};
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double ks_statistic(std::vector<double> xs, double mu, double sigma) {
  if (xs.empty()) throw std::invalid_argument("ks_statistic: empty sample");
  if (sigma <= 0) throw std::invalid_argument("ks_statistic: nonpositive sigma");
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double f = normal_cdf((xs[i] - mu) / sigma);
    d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
    d = std::max(d, std::abs(static_cast<double>(i) / n - f));
  }
  return d;
}

namespace {

// Deterministic standard normal variate for (seed, replicate, index).
double normal_variate(const CounterRng& rng, std::uint64_t idx) {
  std::uint64_t r1 = rng.draw(2 * idx);
  std::uint64_t r2 = rng.draw(2 * idx + 1);
  double u1 = (static_cast<double>(r1 >> 11) + 1.0) / 9007199254740993.0;  // (0, 1]
  double u2 = static_cast<double>(r2 >> 11) / 9007199254740992.0;          // [0, 1)
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
}

}  // namespace

double lilliefors_p_value(const std::vector<double>& xs, std::uint64_t mc_seed, int replicates) {
  if (xs.size() < 4) throw std::invalid_argument("lilliefors: need at least 4 samples");
  double m = mean(xs), sd = sample_sd(xs);
  if (sd <= 0) throw std::invalid_argument("lilliefors: degenerate sample");
  double observed = ks_statistic(xs, m, sd);
  int exceed = 0;
  std::vector<double> sim(xs.size());
  for (int rep = 0; rep < replicates; ++rep) {
    CounterRng rng{mc_seed, static_cast<std::uint64_t>(rep)};
    for (std::size_t i = 0; i < sim.size(); ++i) sim[i] = normal_variate(rng, static_cast<std::uint64_t>(i));
    double sm = mean(sim), ssd = sample_sd(sim);
    if (ks_statistic(sim, sm, ssd) >= observed) ++exceed;
  }
  return (1.0 + exceed) / (1.0 + replicates);
}

namespace {

// Regularized incomplete gamma functions (series / continued fraction).
double gamma_p_series(double a, double x) {
  double sum = 1.0 / a, term = sum, ap = a;
  for (int i = 0; i < 500; ++i) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::abs(term) < std::abs(sum) * 1e-15) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_q_cf(double a, double x) {
  double b = x + 1.0 - a, c = 1e300, d = 1.0 / b, h = d;
  for (int i = 1; i <= 500; ++i) {
    double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < 1e-300) d = 1e-300;
    c = b + an / c;
    if (std::abs(c) < 1e-300) c = 1e-300;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-15) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double chi2_sf(double x, int k) {
  if (x < 0 || k < 1) throw std::invalid_argument("chi2_sf: bad arguments");
  if (x == 0) return 1.0;
  double a = 0.5 * k, hx = 0.5 * x;
  if (hx < a + 1.0) return 1.0 - gamma_p_series(a, hx);
  return gamma_q_cf(a, hx);
}

double log_binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
  return std::lgamma(static_cast<double>(n + 1)) - std::lgamma(static_cast<double>(k + 1)) - std::lgamma(static_cast<double>(n - k + 1));
}

double binomial_abs_pmf(std::int64_t n, std::int64_t d) {
  if (d < 0 || d > n || ((n - d) % 2) != 0) return 0.0;
  std::int64_t k = (n + d) / 2;
  double p = std::exp(log_binomial(n, k) - static_cast<double>(n) * std::log(2.0));
  return d == 0 ? p : 2.0 * p;
}

double binomial_abs_mean(std::int64_t n) {
  double s = 0;
  for (std::int64_t d = (n % 2 == 0) ? 0 : 1; d <= n; d += 2) s += static_cast<double>(d) * binomial_abs_pmf(n, d);
  return s;
}

double total_variation(const std::map<int, double>& p, const std::map<int, double>& q) {
  double tv = 0;
  for (const auto& [k, v] : p) {
    auto it = q.find(k);
    tv += std::abs(v - (it == q.end() ? 0.0 : it->second));
  }
  for (const auto& [k, v] : q)
    if (p.find(k) == p.end()) tv += v;
  return 0.5 * tv;
}

double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("ls_slope: need matching samples of size >= 2");
  double mx = mean(x), my = mean(y), num = 0, den = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    num += (x[i] - mx) * (y[i] - my);
    den += (x[i] - mx) * (x[i] - mx);
  }
  if (den == 0) throw std::invalid_argument("ls_slope: degenerate x values");
  return num / den;
}

}  // namespace cw
