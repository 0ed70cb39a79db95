#include "building.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace cw {

const std::vector<Flag>& flag_table(int q) {
  static std::mutex mu;
  static std::map<int, std::vector<Flag>> tables;
  std::lock_guard<std::mutex> lock(mu);
  auto it = tables.find(q);
  if (it == tables.end()) it = tables.emplace(q, enumerate_flags(q)).first;
  return it->second;
}

int flag_id_fast(const Flag& f) {
  const auto& table = flag_table(f.q);
  auto it = std::lower_bound(table.begin(), table.end(), f, [](const Flag& x, const Flag& y) {
    if (x.point != y.point) return lex_less(x.point, y.point);
    return lex_less(x.line_normal, y.line_normal);
  });
  if (it == table.end() || !(*it == f)) throw std::invalid_argument("not a valid flag: " + f.str());
  return static_cast<int>(it - table.begin());
}

std::optional<GermSimplex> try_germ_of_transition(const Mat3& t, const Mat3& adj_t) {
  const int q = t.q();
  std::int64_t c3 = t.min_val();
  std::array<fq_t, 9> m0 = t.coeff_matrix(c3);
  int r3 = rank3(m0, q);
  if (r3 == 3) return std::nullopt;

  std::array<fq_t, 9> a0 = adj_t.coeff_matrix(adj_t.min_val());
  int ra = rank3(a0, q);

  GermSimplex g;
  g.flag.q = q;
  if (r3 == 1 && ra == 1) {
    g.kind = GermSimplex::Kind::kFull;
    g.flag.point = row_space_basis(a0, q)[0];
    // line normal spans the column space of the bottom coefficient matrix
    std::array<fq_t, 9> m0t;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m0t[static_cast<std::size_t>(3 * i + j)] = m0[static_cast<std::size_t>(3 * j + i)];
    g.flag.line_normal = row_space_basis(m0t, q)[0];
    if (dot3(g.flag.point, g.flag.line_normal, q) != 0) throw std::logic_error("germ: non-incident flag components");
  } else if (r3 == 2) {
    if (ra != 1) throw std::logic_error("germ: inconsistent ranks");
    g.kind = GermSimplex::Kind::kPointOnly;
    g.flag.point = row_space_basis(a0, q)[0];
  } else {
    if (ra != 2) throw std::logic_error("germ: inconsistent ranks");
    g.kind = GermSimplex::Kind::kLineOnly;
    std::array<fq_t, 9> m0t;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m0t[static_cast<std::size_t>(3 * i + j)] = m0[static_cast<std::size_t>(3 * j + i)];
    g.flag.line_normal = row_space_basis(m0t, q)[0];
  }
  return g;
}

GermSimplex germ_of_transition(const Mat3& t, const Mat3& adj_t) {
  auto g = try_germ_of_transition(t, adj_t);
  if (!g) throw std::invalid_argument("germ: zero segment (equal vertices)");
  return *g;
}

GermSimplex germ_flag(const LatticeClass& o, const LatticeClass& y) {
  if (o == y) throw std::invalid_argument("germ_flag: equal vertices");
  Mat3 t = transition(o, y);
  return germ_of_transition(t, t.adjugate());
}

VectorDistance vector_distance_fast(const Mat3& t, const Mat3& adj_t, std::int64_t val_det) {
  std::int64_t c3 = t.min_val();
  std::int64_t c1 = val_det - adj_t.min_val();
  std::int64_t c2 = val_det - c1 - c3;
  return VectorDistance{c1 - c2, c2 - c3};
}

namespace {

Vec3q first_point_where(int q, const Vec3q& must_annihilate, const Vec3q* independent_of, bool want_nonzero_dot) {
  for (const auto& v : projective_points(q)) {
    fq_t d = dot3(v, must_annihilate, q);
    if (want_nonzero_dot ? (d == 0) : (d != 0)) continue;
    if (independent_of != nullptr && v == *independent_of) continue;
    return v;
  }
  throw std::logic_error("no suitable projective point");
}

}  // namespace

LatticeClass sector_point(const LatticeClass& base, const Flag& chamber, VectorDistance v) {
  const int q = base.q();
  if (chamber.q != q) throw std::invalid_argument("flag and vertex over different fields");
  if (v.a < 0 || v.b < 0) throw std::invalid_argument("sector_point: negative Weyl vector");
  // Basis adapted to the chamber: u3 spans the orthogonal of the line,
  // u2 lies on the orthogonal of the point, u1 completes.
  Vec3q u3 = chamber.line_normal;
  Vec3q u2 = first_point_where(q, chamber.point, &u3, false);
  Vec3q u1 = first_point_where(q, chamber.point, nullptr, true);
  Mat3 u(q);
  for (int r = 0; r < 3; ++r) {
    u.at(r, 0) = LaurentPoly::monomial(q, u1[static_cast<std::size_t>(r)], 0);
    u.at(r, 1) = LaurentPoly::monomial(q, u2[static_cast<std::size_t>(r)], 0);
    u.at(r, 2) = LaurentPoly::monomial(q, u3[static_cast<std::size_t>(r)], 0);
  }
  Mat3 d = Mat3::diag(LaurentPoly::monomial(q, 1, v.a + v.b), LaurentPoly::monomial(q, 1, v.b), LaurentPoly::one(q));
  return LatticeClass::from_matrix(base.form() * u * d);
}

std::vector<LatticeClass> neighbors(const LatticeClass& o) {
  const int q = o.q();
  std::vector<LatticeClass> out;
  auto pts = projective_points(q);
  LaurentPoly t1 = LaurentPoly::monomial(q, 1, 1);
  for (const auto& p : pts) {
    // Vertex at vector distance (0,1): the lattice t O^3 + O p. Complete p to
    // a basis with the two standard vectors away from its leading coordinate.
    int lead = 0;
    while (p[static_cast<std::size_t>(lead)] == 0) ++lead;
    Mat3 u(q);
    int col = 0;
    for (int i = 0; i < 3; ++i) {
      if (i == lead) continue;
      u.at(i, col) = LaurentPoly::one(q);
      ++col;
    }
    for (int r = 0; r < 3; ++r) u.at(r, 2) = LaurentPoly::monomial(q, p[static_cast<std::size_t>(r)], 0);
    out.push_back(LatticeClass::from_matrix(o.form() * u * Mat3::diag(t1, t1, LaurentPoly::one(q))));
  }
  for (const auto& n : pts) {
    // Vertex at vector distance (1,0): the preimage of the residue line with
    // normal n; spanned by two points of the line plus t times a transversal.
    Vec3q w2{}, w3{};
    int found = 0;
    for (const auto& v : pts) {
      if (dot3(v, n, q) != 0) continue;
      if (found == 0)
        w2 = v;
      else if (found == 1)
        w3 = v;
      else
        break;
      ++found;
    }
    if (found < 2) throw std::logic_error("projective line with fewer than two points");
    Vec3q w1 = first_point_where(q, n, nullptr, true);
    Mat3 u(q);
    for (int r = 0; r < 3; ++r) {
      u.at(r, 0) = LaurentPoly::monomial(q, w1[static_cast<std::size_t>(r)], 0);
      u.at(r, 1) = LaurentPoly::monomial(q, w2[static_cast<std::size_t>(r)], 0);
      u.at(r, 2) = LaurentPoly::monomial(q, w3[static_cast<std::size_t>(r)], 0);
    }
    out.push_back(LatticeClass::from_matrix(o.form() * u * Mat3::diag(t1, LaurentPoly::one(q), LaurentPoly::one(q))));
  }
  return out;
}

std::vector<LatticeClass> ball_radius2(const LatticeClass& o) {
  std::vector<LatticeClass> out{o};
  std::vector<std::string> seen{o.key()};
  auto push = [&](const LatticeClass& v) {
    std::string k = v.key();
    if (std::find(seen.begin(), seen.end(), k) != seen.end()) return;
    if (cat0_distance2(vector_distance(o, v)) > 4) return;
    seen.push_back(k);
    out.push_back(v);
  };
  auto first_shell = neighbors(o);
  for (const auto& v : first_shell) push(v);
  for (const auto& v : first_shell)
    for (const auto& w : neighbors(v)) push(w);
  std::sort(out.begin(), out.end(), [](const LatticeClass& a, const LatticeClass& b) { return a.key() < b.key(); });
  return out;
}

CertificateWitness hyperbolic_certificate_witness(const Mat3& g, const LatticeClass& o) {
  if (g.det() != LaurentPoly::one(g.q())) throw std::invalid_argument("hyperbolic_certificate: element is not in SL3");
  CertificateWitness w;
  // Transition of [o, g o] in o's coordinates; det = 1, so the backward
  // transition [o, g^-1 o] is exactly the adjugate.
  Mat3 t = (o.inverse_form() * g) * o.form();
  Mat3 adj = t.adjugate();
  w.v_toward = vector_distance_fast(t, adj, 0);
  w.v_backward = VectorDistance{w.v_toward.b, w.v_toward.a};
  if (w.v_toward.a == 0 && w.v_toward.b == 0) return w;  // g fixes o
  w.toward = germ_of_transition(t, adj);
  w.backward = germ_of_transition(adj, t);
  w.certified = w.toward.is_full() && w.backward.is_full() && flags_opposite(w.toward.flag, w.backward.flag);
  return w;
}

bool hyperbolic_certificate(const Mat3& g, const LatticeClass& o) {
  return hyperbolic_certificate_witness(g, o).certified;
}

std::vector<double> displacement_profile(const Mat3& g, const LatticeClass& o, int n_max) {
  if (n_max < 1) throw std::invalid_argument("displacement_profile: need N >= 1");
  // d(g^n o, o) reads off powers of the transition in o's coordinates.
  Mat3 t = (o.inverse_form() * g) * o.form();
  Mat3 adj = t.adjugate();
  std::vector<double> out;
  Mat3 tp = t, ap = adj;
  for (int n = 1; n <= n_max; ++n) {
    out.push_back(std::sqrt(static_cast<double>(cat0_distance2(vector_distance_fast(tp, ap, 0)))));
    if (n != n_max) {
      tp = tp * t;
      ap = ap * adj;
    }
  }
  return out;
}

}  // namespace cw
