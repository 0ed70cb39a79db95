#include "laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace cw {

LaurentPoly LaurentPoly::monomial(int q, fq_t c, std::int64_t e) {
  LaurentPoly p(q);
  c = static_cast<fq_t>(c % q);
  if (c != 0) {
    p.off_ = e;
    p.coef_.assign(1, c);
  }
  return p;
}

std::size_t LaurentPoly::support_size() const {
  std::size_t n = 0;
  for (fq_t c : coef_) n += (c != 0);
  return n;
}

void LaurentPoly::trim() {
  std::size_t lo = 0, hi = coef_.size();
  while (hi > lo && coef_[hi - 1] == 0) --hi;
  while (lo < hi && coef_[lo] == 0) ++lo;
  if (lo == hi) {
    coef_.clear();
    off_ = 0;
    return;
  }
  if (hi != coef_.size()) coef_.resize(hi);
  if (lo != 0) {
    coef_.erase(coef_.begin(), coef_.begin() + static_cast<std::ptrdiff_t>(lo));
    off_ += static_cast<std::int64_t>(lo);
  }
}

void LaurentPoly::check_same_field(const LaurentPoly& o) const {
  if (q_ != o.q_) throw std::invalid_argument("mixed field orders: F_" + std::to_string(q_) + " vs F_" + std::to_string(o.q_));
}

void LaurentPoly::set_coeff(std::int64_t e, fq_t c) {
  c = static_cast<fq_t>(c % q_);
  if (coef_.empty()) {
    if (c == 0) return;
    off_ = e;
    coef_.assign(1, c);
    return;
  }
  std::int64_t lo = off_, hi = off_ + static_cast<std::int64_t>(coef_.size());
  if (e < lo) {
    if (c == 0) return;
    coef_.insert(coef_.begin(), static_cast<std::size_t>(lo - e), 0);
    off_ = e;
    coef_[0] = c;
  } else if (e >= hi) {
    if (c == 0) return;
    coef_.resize(static_cast<std::size_t>(e - off_) + 1, 0);
    coef_.back() = c;
  } else {
    coef_[static_cast<std::size_t>(e - off_)] = c;
    if (c == 0) trim();
  }
}

void LaurentPoly::add_shifted(const LaurentPoly& other, std::int64_t shift, fq_t scale) {
  check_same_field(other);
  scale = static_cast<fq_t>(scale % q_);
  if (other.is_zero() || scale == 0) return;
  std::int64_t olo = other.off_ + shift;
  std::int64_t ohi = olo + static_cast<std::int64_t>(other.coef_.size());
  if (coef_.empty()) {
    off_ = olo;
    coef_.assign(other.coef_.begin(), other.coef_.end());
    if (scale != 1)
      for (fq_t& c : coef_) c = fq_mul(c, scale, q_);
    trim();
    return;
  }
  std::int64_t lo = std::min(off_, olo);
  std::int64_t hi = std::max(off_ + static_cast<std::int64_t>(coef_.size()), ohi);
  if (lo < off_) {
    coef_.insert(coef_.begin(), static_cast<std::size_t>(off_ - lo), 0);
    off_ = lo;
  }
  if (hi > off_ + static_cast<std::int64_t>(coef_.size())) coef_.resize(static_cast<std::size_t>(hi - off_), 0);
  for (std::size_t i = 0; i < other.coef_.size(); ++i) {
    std::size_t j = static_cast<std::size_t>(olo - off_) + i;
    coef_[j] = fq_add(coef_[j], fq_mul(other.coef_[i], scale, q_), q_);
  }
  trim();
}

LaurentPoly LaurentPoly::shifted(std::int64_t e) const {
  LaurentPoly p = *this;
  if (!p.coef_.empty()) p.off_ += e;
  return p;
}

LaurentPoly LaurentPoly::scaled(fq_t c) const {
  LaurentPoly p(q_);
  c = static_cast<fq_t>(c % q_);
  if (c == 0 || coef_.empty()) return p;
  p.off_ = off_;
  p.coef_.resize(coef_.size());
  for (std::size_t i = 0; i < coef_.size(); ++i) p.coef_[i] = fq_mul(coef_[i], c, q_);
  p.trim();
  return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_same_field(b);
  LaurentPoly p(a.q_);
  if (a.is_zero() || b.is_zero()) return p;
  p.off_ = a.off_ + b.off_;
  p.coef_.assign(a.coef_.size() + b.coef_.size() - 1, 0);
  const int q = a.q_;
  for (std::size_t i = 0; i < a.coef_.size(); ++i) {
    if (a.coef_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coef_.size(); ++j) {
      if (b.coef_[j] == 0) continue;
      p.coef_[i + j] = fq_add(p.coef_[i + j], fq_mul(a.coef_[i], b.coef_[j], q), q);
    }
  }
  p.trim();
  return p;
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coef_.size(); ++i) {
    fq_t c = coef_[i];
    if (c == 0) continue;
    std::int64_t e = off_ + static_cast<std::int64_t>(i);
    if (!first) os << " + ";
    first = false;
    if (e == 0) {
      os << static_cast<unsigned>(c);
    } else {
      if (c != 1) os << static_cast<unsigned>(c) << "*";
      os << "t";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

namespace {

void skip_ws(const std::string& s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

std::int64_t parse_int(const std::string& s, std::size_t& i) {
  skip_ws(s, i);
  std::size_t start = i;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start])))) {
    throw std::invalid_argument("expected integer in polynomial at position " + std::to_string(start) + ": " + s);
  }
  return std::stoll(s.substr(start, i - start));
}

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text, int q) {
  require_prime(q);
  LaurentPoly p(q);
  std::size_t i = 0;
  skip_ws(text, i);
  if (i == text.size()) throw std::invalid_argument("empty polynomial");
  bool expect_term = true;
  int sign = 1;
  while (i < text.size()) {
    skip_ws(text, i);
    if (i == text.size()) break;
    char ch = text[i];
    if (ch == '+' || ch == '-') {
      if (expect_term && ch == '-') {
        sign = -sign;
        ++i;
        continue;
      }
      if (expect_term) throw std::invalid_argument("dangling operator in polynomial: " + text);
      sign = (ch == '-') ? -1 : 1;
      ++i;
      expect_term = true;
      continue;
    }
    if (!expect_term) throw std::invalid_argument("missing operator in polynomial: " + text);
    std::int64_t coeff = 1;
    bool saw_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      coeff = parse_int(text, i);
      saw_coeff = true;
      skip_ws(text, i);
      if (i < text.size() && text[i] == '*') ++i;
      skip_ws(text, i);
    }
    std::int64_t expo = 0;
    if (i < text.size() && text[i] == 't') {
      ++i;
      expo = 1;
      skip_ws(text, i);
      if (i < text.size() && text[i] == '^') {
        ++i;
        expo = parse_int(text, i);
      }
    } else if (!saw_coeff) {
      throw std::invalid_argument("expected term in polynomial at position " + std::to_string(i) + ": " + text);
    }
    std::int64_t cmod = ((coeff % q) + q) % q;
    if (sign < 0) cmod = (q - cmod) % q;
    p.set_coeff(expo, fq_add(p.coeff(expo), static_cast<fq_t>(cmod), q));
    sign = 1;
    expect_term = false;
  }
  if (expect_term) throw std::invalid_argument("trailing operator in polynomial: " + text);
  return p;
}

PolyDivmod poly_divmod(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if ((!a.is_zero() && a.val() < 0) || b.val() < 0) throw std::domain_error("poly_divmod needs polynomial operands");
  const int q = a.q();
  PolyDivmod r{LaurentPoly::zero(q), a};
  fq_t blead_inv = fq_inv(b.lead(), q);
  while (!r.rem.is_zero() && r.rem.deg() >= b.deg()) {
    std::int64_t e = r.rem.deg() - b.deg();
    fq_t c = fq_mul(r.rem.lead(), blead_inv, q);
    r.quot.set_coeff(e, fq_add(r.quot.coeff(e), c, q));
    r.rem.add_shifted(b, e, fq_neg(c, q));
  }
  return r;
}

}  // namespace cw
