#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fq.hpp"

namespace cw {

using Vec3q = std::array<fq_t, 3>;

// Scale so the first nonzero coordinate is 1; the canonical representative of
// a projective point (or of a line's normal vector).
Vec3q normalize_projective(Vec3q v, int q);
bool lex_less(const Vec3q& a, const Vec3q& b);
fq_t dot3(const Vec3q& a, const Vec3q& b, int q);

// Flag of PG(2, q): an incident (point, line) pair. The line is stored by its
// normal vector, so incidence reads dot(point, line_normal) == 0.
struct Flag {
  int q = 2;
  Vec3q point{};
  Vec3q line_normal{};

  bool operator==(const Flag& o) const { return q == o.q && point == o.point && line_normal == o.line_normal; }
  bool operator!=(const Flag& o) const { return !(*this == o); }
  std::string str() const;
};

// All normalized points of PG(2, q) in lexicographic order; (q^2+q+1) items.
std::vector<Vec3q> projective_points(int q);

// All flags, ordered lexicographically by (point, line_normal); the position
// in this list is the canonical flag id used in CSV output.
std::vector<Flag> enumerate_flags(int q);
int flag_id(const Flag& f);

// Opposite chambers of the residue: neither point lies on the other's line,
// equivalently gallery distance 3.
bool flags_opposite(const Flag& a, const Flag& b);

// Distance in the flag adjacency graph (adjacent = shared point or line).
int gallery_distance_res(const Flag& a, const Flag& b);

// Small exact linear algebra over F_q used for residue computations.
int rank3(const std::array<fq_t, 9>& m, int q);
// Basis of the row space of a 3x3 matrix (row-major), normalized.
std::vector<Vec3q> row_space_basis(const std::array<fq_t, 9>& m, int q);
// Generator of the kernel of a rank-2 3x3 matrix.
Vec3q kernel_vector(const std::array<fq_t, 9>& m, int q);

}  // namespace cw
