#pragma once

#include <cstdint>
#include <stdexcept>

namespace cw {

// Element of the prime field F_q, stored as an integer in [0, q).
using fq_t = std::uint32_t;

inline bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

inline void require_prime(int q) {
  if (!is_prime(q)) throw std::invalid_argument("field order must be prime, got " + std::to_string(q));
}

inline fq_t fq_add(fq_t a, fq_t b, int q) { fq_t s = a + b; return s >= static_cast<fq_t>(q) ? s - q : s; }
inline fq_t fq_neg(fq_t a, int q) { return a == 0 ? 0 : static_cast<fq_t>(q) - a; }
inline fq_t fq_sub(fq_t a, fq_t b, int q) { return fq_add(a, fq_neg(b, q), q); }
inline fq_t fq_mul(fq_t a, fq_t b, int q) { return static_cast<fq_t>((static_cast<std::uint64_t>(a) * b) % q); }

inline fq_t fq_inv(fq_t a, int q) {
  if (a == 0) throw std::domain_error("inverse of zero in F_q");
  // Fermat: a^(q-2); q is small so the loop is fine.
  fq_t r = 1, base = a;
  int e = q - 2;
  while (e > 0) {
    if (e & 1) r = fq_mul(r, base, q);
    base = fq_mul(base, base, q);
    e >>= 1;
  }
  return r;
}

}  // namespace cw
