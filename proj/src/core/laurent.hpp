#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "fq.hpp"

namespace cw {

// Valuation of the zero polynomial.
inline constexpr std::int64_t kValInf = std::numeric_limits<std::int64_t>::max();

// Laurent polynomial over F_q: finitely many nonzero coefficients, dense
// storage between the lowest and highest exponent. The coefficient vector
// never has zero ends, so val() and deg() are O(1).
class LaurentPoly {
 public:
  LaurentPoly() : q_(2) {}
  explicit LaurentPoly(int q) : q_(q) { require_prime(q); }

  static LaurentPoly zero(int q) { return LaurentPoly(q); }
  static LaurentPoly one(int q) { return monomial(q, 1, 0); }
  static LaurentPoly monomial(int q, fq_t c, std::int64_t e);

  int q() const { return q_; }
  bool is_zero() const { return coef_.empty(); }
  std::int64_t val() const { return coef_.empty() ? kValInf : off_; }
  std::int64_t deg() const { return coef_.empty() ? std::numeric_limits<std::int64_t>::min() : off_ + static_cast<std::int64_t>(coef_.size()) - 1; }
  fq_t coeff(std::int64_t e) const {
    if (coef_.empty() || e < off_ || e >= off_ + static_cast<std::int64_t>(coef_.size())) return 0;
    return coef_[static_cast<std::size_t>(e - off_)];
  }
  fq_t lead() const { return coef_.empty() ? 0 : coef_.back(); }   // coefficient at deg()
  fq_t low() const { return coef_.empty() ? 0 : coef_.front(); }   // coefficient at val()
  std::size_t support_size() const;

  void set_coeff(std::int64_t e, fq_t c);

  // this += t^shift * scale * other
  void add_shifted(const LaurentPoly& other, std::int64_t shift, fq_t scale);

  LaurentPoly shifted(std::int64_t e) const;       // * t^e
  LaurentPoly scaled(fq_t c) const;                // * c

  LaurentPoly& operator+=(const LaurentPoly& o) { add_shifted(o, 0, 1); return *this; }
  LaurentPoly& operator-=(const LaurentPoly& o) { add_shifted(o, 0, fq_neg(1, q_)); return *this; }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { a += b; return a; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { a -= b; return a; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }
  LaurentPoly operator-() const { return scaled(fq_neg(1, q_)); }

  bool operator==(const LaurentPoly& o) const { return q_ == o.q_ && off_ == o.off_ && coef_ == o.coef_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // Textual form like "t^-1 + 1 + t^2", with explicit coefficients for q > 2
  // ("2*t^3"). Zero prints as "0".
  std::string str() const;
  static LaurentPoly parse(const std::string& text, int q);

 private:
  void trim();
  void check_same_field(const LaurentPoly& o) const;

  int q_;
  std::int64_t off_ = 0;        // exponent of coef_[0]
  std::vector<fq_t> coef_;      // empty means zero
};

// Quotient and remainder in F_q[t] (both operands must have val() >= 0 and b
// nonzero): a = quot * b + rem with deg(rem) < deg(b).
struct PolyDivmod {
  LaurentPoly quot;
  LaurentPoly rem;
};
PolyDivmod poly_divmod(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace cw
