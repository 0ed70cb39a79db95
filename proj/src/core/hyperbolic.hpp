#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace cw {

// A backend usable by the space-agnostic operations: a basepoint, a distance
// and an isometric group action. Integer-valued backends report distances as
// exactly-representable doubles, so midpoints and Gromov products stay exact.
template <typename S>
concept MetricSpaceLike = requires(const S& s, const typename S::Point& p, const typename S::Iso& g) {
  { s.basepoint() } -> std::convertible_to<typename S::Point>;
  { s.dist(p, p) } -> std::convertible_to<double>;
  { s.act(g, p) } -> std::convertible_to<typename S::Point>;
  { s.compose(g, g) } -> std::convertible_to<typename S::Iso>;
  { s.inverse(g) } -> std::convertible_to<typename S::Iso>;
};

// (x|y)_o = (d(o,x) + d(o,y) - d(x,y)) / 2
template <MetricSpaceLike S>
double gromov_product(const S& s, const typename S::Point& o, const typename S::Point& x, const typename S::Point& y) {
  return 0.5 * (s.dist(o, x) + s.dist(o, y) - s.dist(x, y));
}

struct DeltaEstimate {
  double delta = 0.0;
  std::size_t sample_size = 0;
  bool exhaustive = false;
};

// Minimal delta making (x|y)_o >= min((x|z)_o, (z|y)_o) - delta hold over all
// quadruples drawn from the given points (basepoints range over the set too).
template <MetricSpaceLike S>
DeltaEstimate estimate_delta(const S& s, const std::vector<typename S::Point>& pts, bool exhaustive = true) {
  if (pts.size() < 4) throw std::invalid_argument("estimate_delta: need at least 4 points");
  double worst = 0.0;
  for (const auto& o : pts)
    for (const auto& x : pts)
      for (const auto& z : pts) {
        double xz = gromov_product(s, o, x, z);
        for (const auto& y : pts) {
          double zy = gromov_product(s, o, z, y);
          double xy = gromov_product(s, o, x, y);
          double deficiency = std::min(xz, zy) - xy;
          if (deficiency > worst) worst = deficiency;
        }
      }
  return DeltaEstimate{worst, pts.size(), exhaustive};
}

// b_x^o(y) = d(x, y) - d(x, o)
template <MetricSpaceLike S>
double busemann_value(const S& s, const typename S::Point& x, const typename S::Point& y, const typename S::Point& o) {
  return s.dist(x, y) - s.dist(x, o);
}

// beta(g, x) = b_x(g^-1 o)
template <MetricSpaceLike S>
double busemann_cocycle(const S& s, const typename S::Iso& g, const typename S::Point& x, const typename S::Point& o) {
  return busemann_value(s, x, s.act(s.inverse(g), o), o);
}

template <typename Point>
struct Shadow {
  Point viewpoint;  // o
  Point center;     // x
  double radius;    // R
};

// y lies in S_o(x, R) iff (y|o)_x <= R.
template <MetricSpaceLike S>
bool in_shadow(const S& s, const Shadow<typename S::Point>& sh, const typename S::Point& y) {
  return gromov_product(s, sh.center, y, sh.viewpoint) <= sh.radius;
}

// If d(o, go) >= 2 (go | g^-1 o)_o + C, the translation length of g is at
// least d(o, go) - 2 (go | g^-1 o)_o up to O(delta) slack; absent otherwise.
template <MetricSpaceLike S>
std::optional<double> loxodromic_lower_bound(const S& s, const typename S::Iso& g, const typename S::Point& o, double margin_c) {
  if (margin_c < 0) throw std::invalid_argument("loxodromic_lower_bound: margin must be >= 0");
  typename S::Point go = s.act(g, o);
  typename S::Point gio = s.act(s.inverse(g), o);
  double displacement = s.dist(o, go);
  double gp = gromov_product(s, o, go, gio);
  if (displacement < 2.0 * gp + margin_c) return std::nullopt;
  return displacement - 2.0 * gp;
}

struct TranslationLengthReport {
  std::optional<double> lower_bound;
  double stable_estimate = 0.0;  // d(g^N o, o) / N
  int iterations = 0;
  double max_deviation = 0.0;    // max_n |d(g^n o, o)/n - stable_estimate|
};

template <MetricSpaceLike S>
TranslationLengthReport stable_translation_length(const S& s, const typename S::Iso& g, const typename S::Point& o, int n_max) {
  if (n_max < 1) throw std::invalid_argument("stable_translation_length: need N >= 1");
  TranslationLengthReport r;
  r.iterations = n_max;
  std::vector<double> per_n;
  typename S::Iso power = g;
  for (int n = 1; n <= n_max; ++n) {
    per_n.push_back(s.dist(s.act(power, o), o) / n);
    if (n != n_max) power = s.compose(power, g);
  }
  r.stable_estimate = per_n.back();
  for (double v : per_n) r.max_deviation = std::max(r.max_deviation, std::abs(v - r.stable_estimate));
  return r;
}

}  // namespace cw
