#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "matrix3.hpp"

namespace cw {

// Valuations of the Smith form over F_q[[t]] of a nonsingular Laurent matrix,
// sorted descending: a1 >= a2 >= a3 and a1 + a2 + a3 = val(det M).
// Computed by diagonalizing over F_q[t] with exact Euclidean reduction.
std::array<std::int64_t, 3> elementary_divisors(const Mat3& m);

// Vertex of the Bruhat-Tits building: homothety class of a rank-3 lattice
// over F_q[[t]], held as its canonical basis matrix. The canonical form is
// the column Hermite basis of the lattice's polynomial points, so pivots are
// exact powers of t, off-pivot entries in row i are reduced mod t^{d_i}, and
// the whole matrix is scaled so its minimum entry valuation is 0. Two
// matrices represent the same vertex iff their canonical forms coincide.
class LatticeClass {
 public:
  LatticeClass() : form_(Mat3::identity(2)), det_val_(0) {}

  static LatticeClass from_matrix(const Mat3& m);          // throws on det == 0
  static LatticeClass standard(int q) { return from_matrix(Mat3::identity(q)); }

  const Mat3& form() const { return form_; }
  int q() const { return form_.q(); }
  // det(form) is exactly t^det_val.
  std::int64_t det_val() const { return det_val_; }
  // Exact inverse of the canonical form, as a Laurent matrix.
  Mat3 inverse_form() const { return form_.adjugate().shifted(-det_val_); }

  bool operator==(const LatticeClass& o) const { return form_ == o.form_; }
  bool operator!=(const LatticeClass& o) const { return !(*this == o); }
  std::string key() const { return form_.str(); }

 private:
  Mat3 form_;
  std::int64_t det_val_;
};

// Canonical column Hermite form of the lattice spanned by m's columns
// (before the homothety normalization applied by LatticeClass).
Mat3 hermite_lattice_basis(const Mat3& m);

// Transition matrix x^-1 y between canonical representatives, exact Laurent.
Mat3 transition(const LatticeClass& x, const LatticeClass& y);

struct VectorDistance {
  std::int64_t a = 0;
  std::int64_t b = 0;
  bool operator==(const VectorDistance& o) const { return a == o.a && b == o.b; }
};

// Weyl-chamber valued distance: (a, b) = (a1 - a2, a2 - a3) from the
// elementary divisors of the transition matrix.
VectorDistance vector_distance(const LatticeClass& x, const LatticeClass& y);
VectorDistance vector_distance_of(const Mat3& transition_matrix);

// CAT(0) distance: sqrt(a^2 + ab + b^2) with unit edge lengths; the squared
// form is an exact integer and is preferred for comparisons.
std::int64_t cat0_distance2(VectorDistance v);
double cat0_distance(const LatticeClass& x, const LatticeClass& y);

// Vertex colouring in {0,1,2}: valuation of det of the canonical form mod 3.
int vertex_type(const LatticeClass& x);

bool is_regular_segment(const LatticeClass& x, const LatticeClass& y);  // throws if x == y

}  // namespace cw
