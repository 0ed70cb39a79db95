#include "lattice.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace cw {

namespace {

// Degree of a polynomial entry for pivot selection; zero sorts last.
std::int64_t pivot_deg(const LaurentPoly& p) { return p.is_zero() ? std::numeric_limits<std::int64_t>::max() : p.deg(); }

}  // namespace

std::array<std::int64_t, 3> elementary_divisors(const Mat3& m) {
  LaurentPoly d = m.det();
  if (d.is_zero()) throw std::domain_error("elementary_divisors: singular matrix");
  std::int64_t shift = m.min_val();
  Mat3 w = m.shifted(-shift);

  // Diagonalize over F_q[t] by Euclidean row/column reduction. Only the
  // diagonal valuations are needed, so no divisibility fix-up pass.
  for (int p = 0; p < 3; ++p) {
    for (;;) {
      int bi = -1, bj = -1;
      std::int64_t best = std::numeric_limits<std::int64_t>::max();
      for (int i = p; i < 3; ++i)
        for (int j = p; j < 3; ++j)
          if (!w.at(i, j).is_zero() && pivot_deg(w.at(i, j)) < best) {
            best = pivot_deg(w.at(i, j));
            bi = i;
            bj = j;
          }
      if (bi < 0) throw std::domain_error("elementary_divisors: rank deficiency");
      if (bi != p)
        for (int j = 0; j < 3; ++j) std::swap(w.at(p, j), w.at(bi, j));
      if (bj != p)
        for (int i = 0; i < 3; ++i) std::swap(w.at(i, p), w.at(i, bj));

      bool clean = true;
      for (int i = p + 1; i < 3; ++i) {
        if (w.at(i, p).is_zero()) continue;
        auto dm = poly_divmod(w.at(i, p), w.at(p, p));
        for (int j = p; j < 3; ++j) w.at(i, j) -= dm.quot * w.at(p, j);
        if (!w.at(i, p).is_zero()) clean = false;
      }
      for (int j = p + 1; j < 3; ++j) {
        if (w.at(p, j).is_zero()) continue;
        auto dm = poly_divmod(w.at(p, j), w.at(p, p));
        for (int i = p; i < 3; ++i) w.at(i, j) -= dm.quot * w.at(i, p);
        if (!w.at(p, j).is_zero()) clean = false;
      }
      if (clean) break;
    }
  }

  std::array<std::int64_t, 3> vals{w.at(0, 0).val() + shift, w.at(1, 1).val() + shift, w.at(2, 2).val() + shift};
  std::sort(vals.begin(), vals.end(), std::greater<std::int64_t>());
  return vals;
}

namespace {

using Col = std::array<LaurentPoly, 3>;

void col_submul(Col& a, const Col& b, const LaurentPoly& quot) {
  for (int r = 0; r < 3; ++r) a[static_cast<std::size_t>(r)] -= quot * b[static_cast<std::size_t>(r)];
}

}  // namespace

Mat3 hermite_lattice_basis(const Mat3& m) {
  const int q = m.q();
  LaurentPoly d = m.det();
  if (d.is_zero()) throw std::domain_error("lattice basis: singular matrix");
  std::int64_t v = m.min_val();
  Mat3 n = m.shifted(-v);
  std::int64_t mod = n.det().val();  // t^mod O^3 is inside the lattice of n

  // Generators of (lattice of n) intersected with F_q[t]^3: the columns of n
  // together with t^mod e_i.
  std::vector<Col> cols;
  for (int j = 0; j < 3; ++j) cols.push_back({n.at(0, j), n.at(1, j), n.at(2, j)});
  for (int i = 0; i < 3; ++i) {
    Col c{LaurentPoly::zero(q), LaurentPoly::zero(q), LaurentPoly::zero(q)};
    c[static_cast<std::size_t>(i)] = LaurentPoly::monomial(q, 1, mod);
    cols.push_back(c);
  }

  std::array<int, 3> pivot{-1, -1, -1};
  std::vector<bool> taken(cols.size(), false);
  for (int row = 2; row >= 0; --row) {
    for (;;) {
      // Reduce until at most one free column has a nonzero entry in this row.
      int a = -1, b = -1;
      for (std::size_t j = 0; j < cols.size(); ++j) {
        if (taken[j] || cols[j][static_cast<std::size_t>(row)].is_zero()) continue;
        if (a < 0 || pivot_deg(cols[j][static_cast<std::size_t>(row)]) < pivot_deg(cols[static_cast<std::size_t>(a)][static_cast<std::size_t>(row)])) {
          b = a;
          a = static_cast<int>(j);
        } else if (b < 0 || pivot_deg(cols[j][static_cast<std::size_t>(row)]) < pivot_deg(cols[static_cast<std::size_t>(b)][static_cast<std::size_t>(row)])) {
          b = static_cast<int>(j);
        }
      }
      if (b < 0) {
        if (a < 0) throw std::domain_error("lattice basis: rank deficiency");
        pivot[static_cast<std::size_t>(row)] = a;
        taken[static_cast<std::size_t>(a)] = true;
        break;
      }
      auto dm = poly_divmod(cols[static_cast<std::size_t>(b)][static_cast<std::size_t>(row)], cols[static_cast<std::size_t>(a)][static_cast<std::size_t>(row)]);
      col_submul(cols[static_cast<std::size_t>(b)], cols[static_cast<std::size_t>(a)], dm.quot);
    }
  }

  Mat3 h(q);
  for (int j = 0; j < 3; ++j)
    for (int r = 0; r < 3; ++r) h.at(r, j) = cols[static_cast<std::size_t>(pivot[static_cast<std::size_t>(j)])][static_cast<std::size_t>(r)];

  // Monic pivots, then reduce entries right of each pivot.
  for (int j = 0; j < 3; ++j) {
    fq_t c = fq_inv(h.at(j, j).lead(), q);
    if (c != 1)
      for (int r = 0; r < 3; ++r) h.at(r, j) = h.at(r, j).scaled(c);
  }
  for (int j = 1; j < 3; ++j)
    for (int i = j - 1; i >= 0; --i) {
      if (h.at(i, j).is_zero()) continue;
      auto dm = poly_divmod(h.at(i, j), h.at(i, i));
      for (int r = 0; r < 3; ++r) h.at(r, j) -= dm.quot * h.at(r, i);
    }

  for (int i = 0; i < 3; ++i) {
    const LaurentPoly& piv = h.at(i, i);
    if (piv.support_size() != 1 || piv.lead() != 1)
      throw std::logic_error("lattice basis: pivot is not a power of t: " + piv.str());
  }
  return h.shifted(v);
}

LatticeClass LatticeClass::from_matrix(const Mat3& m) {
  Mat3 h = hermite_lattice_basis(m);
  h = h.shifted(-h.min_val());
  LatticeClass c;
  c.form_ = h;
  LaurentPoly d = h.det();
  if (d.support_size() != 1 || d.lead() != 1) throw std::logic_error("canonical form determinant is not a power of t");
  c.det_val_ = d.val();
  return c;
}

Mat3 transition(const LatticeClass& x, const LatticeClass& y) {
  if (x.q() != y.q()) throw std::invalid_argument("mixed field orders between vertices");
  return (x.form().adjugate() * y.form()).shifted(-x.det_val());
}

VectorDistance vector_distance_of(const Mat3& transition_matrix) {
  auto ed = elementary_divisors(transition_matrix);
  return VectorDistance{ed[0] - ed[1], ed[1] - ed[2]};
}

VectorDistance vector_distance(const LatticeClass& x, const LatticeClass& y) {
  return vector_distance_of(transition(x, y));
}

std::int64_t cat0_distance2(VectorDistance v) { return v.a * v.a + v.a * v.b + v.b * v.b; }

double cat0_distance(const LatticeClass& x, const LatticeClass& y) {
  return std::sqrt(static_cast<double>(cat0_distance2(vector_distance(x, y))));
}

int vertex_type(const LatticeClass& x) { return static_cast<int>(((x.det_val() % 3) + 3) % 3); }

bool is_regular_segment(const LatticeClass& x, const LatticeClass& y) {
  VectorDistance v = vector_distance(x, y);
  if (v.a == 0 && v.b == 0) throw std::invalid_argument("is_regular_segment: equal vertices");
  return v.a > 0 && v.b > 0;
}

}  // namespace cw
