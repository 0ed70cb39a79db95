#include "matrix3.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace cw {

void Mat3::fill_zero() {
  for (auto& p : m_) p = LaurentPoly::zero(q_);
}

Mat3 Mat3::identity(int q) {
  Mat3 r(q);
  for (int i = 0; i < 3; ++i) r.at(i, i) = LaurentPoly::one(q);
  return r;
}

Mat3 Mat3::diag(const LaurentPoly& a, const LaurentPoly& b, const LaurentPoly& c) {
  if (a.q() != b.q() || b.q() != c.q()) throw std::invalid_argument("mixed field orders in diag");
  Mat3 r(a.q());
  r.at(0, 0) = a;
  r.at(1, 1) = b;
  r.at(2, 2) = c;
  return r;
}

Mat3 Mat3::elementary(int q, int i, int j, const LaurentPoly& p) {
  if (i == j || i < 0 || j < 0 || i > 2 || j > 2) throw std::invalid_argument("elementary matrix needs off-diagonal position");
  Mat3 r = identity(q);
  r.at(i, j) = p;
  return r;
}

Mat3 Mat3::operator*(const Mat3& o) const {
  if (q_ != o.q_) throw std::invalid_argument("mixed field orders in matrix product");
  Mat3 r(q_);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      LaurentPoly s(q_);
      for (int k = 0; k < 3; ++k) s += at(i, k) * o.at(k, j);
      r.at(i, j) = s;
    }
  return r;
}

LaurentPoly Mat3::det() const {
  const auto& a = *this;
  LaurentPoly r(q_);
  r += a.at(0, 0) * (a.at(1, 1) * a.at(2, 2) - a.at(1, 2) * a.at(2, 1));
  r -= a.at(0, 1) * (a.at(1, 0) * a.at(2, 2) - a.at(1, 2) * a.at(2, 0));
  r += a.at(0, 2) * (a.at(1, 0) * a.at(2, 1) - a.at(1, 1) * a.at(2, 0));
  return r;
}

Mat3 Mat3::adjugate() const {
  Mat3 r(q_);
  const auto& a = *this;
  auto minor2 = [&](int r0, int r1, int c0, int c1) {
    return a.at(r0, c0) * a.at(r1, c1) - a.at(r0, c1) * a.at(r1, c0);
  };
  // adj = transpose of cofactor matrix
  r.at(0, 0) = minor2(1, 2, 1, 2);
  r.at(1, 0) = -minor2(1, 2, 0, 2);
  r.at(2, 0) = minor2(1, 2, 0, 1);
  r.at(0, 1) = -minor2(0, 2, 1, 2);
  r.at(1, 1) = minor2(0, 2, 0, 2);
  r.at(2, 1) = -minor2(0, 2, 0, 1);
  r.at(0, 2) = minor2(0, 1, 1, 2);
  r.at(1, 2) = -minor2(0, 1, 0, 2);
  r.at(2, 2) = minor2(0, 1, 0, 1);
  return r;
}

Mat3 Mat3::transpose() const {
  Mat3 r(q_);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.at(i, j) = at(j, i);
  return r;
}

Mat3 Mat3::shifted(std::int64_t e) const {
  Mat3 r(q_);
  for (int i = 0; i < 9; ++i) r.m_[static_cast<std::size_t>(i)] = m_[static_cast<std::size_t>(i)].shifted(e);
  return r;
}

void Mat3::col_addmul(int j, int i, fq_t c, std::int64_t e) {
  for (int r = 0; r < 3; ++r) at(r, j).add_shifted(at(r, i), e, c);
}

void Mat3::row_addmul(int j, int i, fq_t c, std::int64_t e) {
  for (int col = 0; col < 3; ++col) at(j, col).add_shifted(at(i, col), e, c);
}

std::int64_t Mat3::min_val() const {
  std::int64_t v = kValInf;
  for (const auto& p : m_)
    if (!p.is_zero()) v = std::min(v, p.val());
  return v;
}

std::array<fq_t, 9> Mat3::coeff_matrix(std::int64_t e) const {
  std::array<fq_t, 9> r{};
  for (int i = 0; i < 9; ++i) r[static_cast<std::size_t>(i)] = m_[static_cast<std::size_t>(i)].coeff(e);
  return r;
}

bool Mat3::is_zero() const {
  for (const auto& p : m_)
    if (!p.is_zero()) return false;
  return true;
}

std::string Mat3::str() const {
  std::string s = "[";
  for (int i = 0; i < 3; ++i) {
    s += "[";
    for (int j = 0; j < 3; ++j) {
      s += at(i, j).str();
      if (j != 2) s += ",";
    }
    s += "]";
    if (i != 2) s += ",";
  }
  s += "]";
  return s;
}

namespace {

std::vector<std::string> split_top_level(const std::string& s, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '[' || ch == '(') ++depth;
    if (ch == ']' || ch == ')') --depth;
    if (ch == sep && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string strip(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

Mat3 Mat3::parse(const std::string& text, int q) {
  std::string s = strip(text);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw std::invalid_argument("matrix must look like [[..],[..],[..]]: " + text);
  auto rows = split_top_level(s.substr(1, s.size() - 2), ',');
  if (rows.size() != 3) throw std::invalid_argument("matrix needs 3 rows: " + text);
  Mat3 r(q);
  for (int i = 0; i < 3; ++i) {
    std::string row = strip(rows[static_cast<std::size_t>(i)]);
    if (row.size() < 2 || row.front() != '[' || row.back() != ']') throw std::invalid_argument("matrix row must look like [a,b,c]: " + row);
    auto cells = split_top_level(row.substr(1, row.size() - 2), ',');
    if (cells.size() != 3) throw std::invalid_argument("matrix row needs 3 entries: " + row);
    for (int j = 0; j < 3; ++j) r.at(i, j) = LaurentPoly::parse(strip(cells[static_cast<std::size_t>(j)]), q);
  }
  return r;
}

Mat3 parse_group_element(const std::string& text, int q) {
  auto factors = split_top_level(strip(text), '*');
  Mat3 acc = Mat3::identity(q);
  bool any = false;
  for (const auto& raw : factors) {
    std::string f = strip(raw);
    if (f.empty()) throw std::invalid_argument("empty factor in group element: " + text);
    Mat3 m(q);
    if (f.rfind("diag(", 0) == 0 && f.back() == ')') {
      auto args = split_top_level(f.substr(5, f.size() - 6), ',');
      if (args.size() != 3) throw std::invalid_argument("diag(...) needs 3 entries: " + f);
      m = Mat3::diag(LaurentPoly::parse(strip(args[0]), q), LaurentPoly::parse(strip(args[1]), q), LaurentPoly::parse(strip(args[2]), q));
    } else if (f.size() >= 5 && f[0] == 'e' && std::isdigit(static_cast<unsigned char>(f[1])) && std::isdigit(static_cast<unsigned char>(f[2])) && f[3] == '(' && f.back() == ')') {
      int i = f[1] - '1', j = f[2] - '1';
      m = Mat3::elementary(q, i, j, LaurentPoly::parse(f.substr(4, f.size() - 5), q));
    } else if (f.front() == '[') {
      m = Mat3::parse(f, q);
    } else {
      throw std::invalid_argument("cannot parse group element factor: " + f);
    }
    acc = any ? acc * m : m;
    any = true;
  }
  return acc;
}

}  // namespace cw
