#include "flags.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cw {

Vec3q normalize_projective(Vec3q v, int q) {
  for (auto& c : v) c = static_cast<fq_t>(c % q);
  for (int i = 0; i < 3; ++i) {
    if (v[static_cast<std::size_t>(i)] != 0) {
      fq_t inv = fq_inv(v[static_cast<std::size_t>(i)], q);
      for (auto& c : v) c = fq_mul(c, inv, q);
      return v;
    }
  }
  throw std::invalid_argument("cannot normalize the zero vector");
}

bool lex_less(const Vec3q& a, const Vec3q& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

fq_t dot3(const Vec3q& a, const Vec3q& b, int q) {
  fq_t s = 0;
  for (int i = 0; i < 3; ++i) s = fq_add(s, fq_mul(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)], q), q);
  return s;
}

std::string Flag::str() const {
  std::ostringstream os;
  os << "([" << point[0] << ":" << point[1] << ":" << point[2] << "],[" << line_normal[0] << ":" << line_normal[1] << ":" << line_normal[2] << "])";
  return os.str();
}

std::vector<Vec3q> projective_points(int q) {
  require_prime(q);
  std::vector<Vec3q> pts;
  for (fq_t a = 0; a < static_cast<fq_t>(q); ++a)
    for (fq_t b = 0; b < static_cast<fq_t>(q); ++b)
      for (fq_t c = 0; c < static_cast<fq_t>(q); ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        Vec3q v = normalize_projective({a, b, c}, q);
        pts.push_back(v);
      }
  std::sort(pts.begin(), pts.end(), [](const Vec3q& x, const Vec3q& y) { return lex_less(x, y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

std::vector<Flag> enumerate_flags(int q) {
  auto pts = projective_points(q);
  std::vector<Flag> flags;
  for (const auto& p : pts)
    for (const auto& n : pts)
      if (dot3(p, n, q) == 0) flags.push_back(Flag{q, p, n});
  // pts is lex sorted, so the double loop is already in canonical order.
  return flags;
}

int flag_id(const Flag& f) {
  auto flags = enumerate_flags(f.q);
  for (std::size_t i = 0; i < flags.size(); ++i)
    if (flags[i] == f) return static_cast<int>(i);
  throw std::invalid_argument("not a valid flag: " + f.str());
}

bool flags_opposite(const Flag& a, const Flag& b) {
  if (a.q != b.q) throw std::invalid_argument("flags over different fields");
  return dot3(a.point, b.line_normal, a.q) != 0 && dot3(b.point, a.line_normal, a.q) != 0;
}

int gallery_distance_res(const Flag& a, const Flag& b) {
  if (a.q != b.q) throw std::invalid_argument("flags over different fields");
  if (a == b) return 0;
  if (a.point == b.point || a.line_normal == b.line_normal) return 1;
  if (flags_opposite(a, b)) return 3;
  return 2;
}

int rank3(const std::array<fq_t, 9>& m, int q) {
  std::array<fq_t, 9> w = m;
  int rank = 0;
  for (int col = 0; col < 3 && rank < 3; ++col) {
    int piv = -1;
    for (int r = rank; r < 3; ++r)
      if (w[static_cast<std::size_t>(3 * r + col)] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    for (int c = 0; c < 3; ++c) std::swap(w[static_cast<std::size_t>(3 * piv + c)], w[static_cast<std::size_t>(3 * rank + c)]);
    fq_t inv = fq_inv(w[static_cast<std::size_t>(3 * rank + col)], q);
    for (int c = 0; c < 3; ++c) w[static_cast<std::size_t>(3 * rank + c)] = fq_mul(w[static_cast<std::size_t>(3 * rank + c)], inv, q);
    for (int r = 0; r < 3; ++r) {
      if (r == rank) continue;
      fq_t f = w[static_cast<std::size_t>(3 * r + col)];
      if (f == 0) continue;
      for (int c = 0; c < 3; ++c)
        w[static_cast<std::size_t>(3 * r + c)] = fq_sub(w[static_cast<std::size_t>(3 * r + c)], fq_mul(f, w[static_cast<std::size_t>(3 * rank + c)], q), q);
    }
    ++rank;
  }
  return rank;
}

std::vector<Vec3q> row_space_basis(const std::array<fq_t, 9>& m, int q) {
  std::array<fq_t, 9> w = m;
  std::vector<Vec3q> rows;
  int rank = 0;
  for (int col = 0; col < 3 && rank < 3; ++col) {
    int piv = -1;
    for (int r = rank; r < 3; ++r)
      if (w[static_cast<std::size_t>(3 * r + col)] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    for (int c = 0; c < 3; ++c) std::swap(w[static_cast<std::size_t>(3 * piv + c)], w[static_cast<std::size_t>(3 * rank + c)]);
    fq_t inv = fq_inv(w[static_cast<std::size_t>(3 * rank + col)], q);
    for (int c = 0; c < 3; ++c) w[static_cast<std::size_t>(3 * rank + c)] = fq_mul(w[static_cast<std::size_t>(3 * rank + c)], inv, q);
    for (int r = 0; r < 3; ++r) {
      if (r == rank) continue;
      fq_t f = w[static_cast<std::size_t>(3 * r + col)];
      if (f == 0) continue;
      for (int c = 0; c < 3; ++c)
        w[static_cast<std::size_t>(3 * r + c)] = fq_sub(w[static_cast<std::size_t>(3 * r + c)], fq_mul(f, w[static_cast<std::size_t>(3 * rank + c)], q), q);
    }
    ++rank;
  }
  for (int r = 0; r < rank; ++r)
    rows.push_back(normalize_projective({w[static_cast<std::size_t>(3 * r)], w[static_cast<std::size_t>(3 * r + 1)], w[static_cast<std::size_t>(3 * r + 2)]}, q));
  return rows;
}

Vec3q kernel_vector(const std::array<fq_t, 9>& m, int q) {
  // Solve m v = 0 by trying each normalized projective point; the matrices
  // involved are 3x3 over a tiny field, so brute force is exact and simple.
  for (const auto& v : projective_points(q)) {
    bool ok = true;
    for (int r = 0; r < 3 && ok; ++r) {
      fq_t s = 0;
      for (int c = 0; c < 3; ++c) s = fq_add(s, fq_mul(m[static_cast<std::size_t>(3 * r + c)], v[static_cast<std::size_t>(c)], q), q);
      ok = (s == 0);
    }
    if (ok) return v;
  }
  throw std::domain_error("kernel_vector: trivial kernel");
}

}  // namespace cw
