#pragma once

#include <array>
#include <string>

#include "laurent.hpp"

namespace cw {

// 3x3 matrix over F_q[t, t^-1].
class Mat3 {
 public:
  Mat3() : q_(2) { fill_zero(); }
  explicit Mat3(int q) : q_(q) { require_prime(q); fill_zero(); }

  static Mat3 identity(int q);
  static Mat3 diag(const LaurentPoly& a, const LaurentPoly& b, const LaurentPoly& c);
  // Elementary matrix with entry p at (i, j), i != j (0-based).
  static Mat3 elementary(int q, int i, int j, const LaurentPoly& p);

  int q() const { return q_; }
  const LaurentPoly& at(int i, int j) const { return m_[static_cast<std::size_t>(3 * i + j)]; }
  LaurentPoly& at(int i, int j) { return m_[static_cast<std::size_t>(3 * i + j)]; }

  Mat3 operator*(const Mat3& o) const;
  bool operator==(const Mat3& o) const { return q_ == o.q_ && m_ == o.m_; }
  bool operator!=(const Mat3& o) const { return !(*this == o); }

  LaurentPoly det() const;
  Mat3 adjugate() const;       // adj(M), so M * adj(M) = det(M) * I
  Mat3 transpose() const;
  Mat3 shifted(std::int64_t e) const;  // t^e * M

  // In-place column operation col_j += c * t^e * col_i; used on walk hot paths.
  void col_addmul(int j, int i, fq_t c, std::int64_t e);
  void row_addmul(int j, int i, fq_t c, std::int64_t e);  // row_j += c t^e row_i

  // Minimum valuation over all entries (kValInf if zero matrix).
  std::int64_t min_val() const;
  // Coefficient matrix at exponent e, as 9 field elements row-major.
  std::array<fq_t, 9> coeff_matrix(std::int64_t e) const;

  bool is_zero() const;
  std::string str() const;     // [[p,p,p],[p,p,p],[p,p,p]]
  static Mat3 parse(const std::string& text, int q);

 private:
  void fill_zero();
  int q_;
  std::array<LaurentPoly, 9> m_;
};

// Parses group-element notation for the building backend:
//   diag(t,1,t^-1)       diagonal matrix
//   e12(t^-1)            elementary (1-based indices)
//   [[1,t,0],[0,1,0],[0,0,1]]
//   products chained with '*', e.g. "e12(t)*e21(t^-1)"
Mat3 parse_group_element(const std::string& text, int q);

}  // namespace cw
