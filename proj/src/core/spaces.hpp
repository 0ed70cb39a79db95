#pragma once

#include <array>
#include <cstdlib>

#include "building.hpp"
#include "walls.hpp"
#include "words.hpp"

namespace cw {

// Z with translations.
struct LineSpace {
  using Point = std::int64_t;
  using Iso = std::int64_t;
  Point basepoint() const { return 0; }
  double dist(Point x, Point y) const { return static_cast<double>(std::llabs(x - y)); }
  Point act(Iso g, Point x) const { return g + x; }
  Iso compose(Iso g, Iso h) const { return g + h; }
  Iso inverse(Iso g) const { return -g; }
  Iso identity() const { return 0; }
};

// Z^2 with the l1 metric and translations.
struct Grid2Space {
  using Point = std::array<std::int64_t, 2>;
  using Iso = std::array<std::int64_t, 2>;
  Point basepoint() const { return {0, 0}; }
  double dist(const Point& x, const Point& y) const { return static_cast<double>(std::llabs(x[0] - y[0]) + std::llabs(x[1] - y[1])); }
  Point act(const Iso& g, const Point& x) const { return {g[0] + x[0], g[1] + x[1]}; }
  Iso compose(const Iso& g, const Iso& h) const { return {g[0] + h[0], g[1] + h[1]}; }
  Iso inverse(const Iso& g) const { return {-g[0], -g[1]}; }
  Iso identity() const { return {0, 0}; }
};

// Z^2 * Z with the word metric of the standard generators.
struct TreeFlatsWordSpace {
  using Point = GroupWord;
  using Iso = GroupWord;
  Point basepoint() const { return GroupWord::identity(); }
  double dist(const Point& x, const Point& y) const { return static_cast<double>(word_distance(x, y)); }
  Point act(const Iso& g, const Point& x) const { return g * x; }
  Iso compose(const Iso& g, const Iso& h) const { return g * h; }
  Iso inverse(const Iso& g) const { return g.inverse(); }
  Iso identity() const { return GroupWord::identity(); }
};

// Z^2 * Z with the chain metric d_L.
struct TreeFlatsChainSpace {
  std::int64_t l = 0;
  using Point = GroupWord;
  using Iso = GroupWord;
  Point basepoint() const { return GroupWord::identity(); }
  double dist(const Point& x, const Point& y) const { return static_cast<double>(chain_metric_dl(x, y, l)); }
  Point act(const Iso& g, const Point& x) const { return g * x; }
  Iso compose(const Iso& g, const Iso& h) const { return g * h; }
  Iso inverse(const Iso& g) const { return g.inverse(); }
  Iso identity() const { return GroupWord::identity(); }
};

// Vertices of the SL3 building with the CAT(0) metric; isometries are SL3
// matrices over the Laurent ring (inverse = adjugate, valid since det = 1).
struct BuildingSpace {
  int q = 2;
  using Point = LatticeClass;
  using Iso = Mat3;
  Point basepoint() const { return LatticeClass::standard(q); }
  double dist(const Point& x, const Point& y) const { return cat0_distance(x, y); }
  Point act(const Iso& g, const Point& x) const { return LatticeClass::from_matrix(g * x.form()); }
  Iso compose(const Iso& g, const Iso& h) const { return g * h; }
  Iso inverse(const Iso& g) const { return g.adjugate(); }
  Iso identity() const { return Mat3::identity(q); }
};

}  // namespace cw
