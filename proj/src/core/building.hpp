#pragma once

#include <optional>
#include <vector>

#include "flags.hpp"
#include "lattice.hpp"

namespace cw {

// Direction of a segment [o, y] seen in the residue of o: a full chamber for
// regular segments, a single vertex of the residue for singular ones.
struct GermSimplex {
  enum class Kind { kFull, kPointOnly, kLineOnly };
  Kind kind = Kind::kFull;
  Flag flag;  // point-only germs carry only .point, line-only germs only .line_normal

  bool is_full() const { return kind == Kind::kFull; }
};

// Cached canonical flag list for a field order (thread-safe, built once).
const std::vector<Flag>& flag_table(int q);
int flag_id_fast(const Flag& f);

// Germ of [o, y] at o, from the transition matrix and its adjugate. Total on
// distinct vertices; the try variant returns nullopt when the transition is a
// homothety (o == y), the plain one throws.
std::optional<GermSimplex> try_germ_of_transition(const Mat3& t, const Mat3& adj_t);
GermSimplex germ_of_transition(const Mat3& t, const Mat3& adj_t);
GermSimplex germ_flag(const LatticeClass& o, const LatticeClass& y);

// Vector distance read off a transition matrix and its adjugate in O(1) from
// cached valuations; val_det is val(det t).
VectorDistance vector_distance_fast(const Mat3& t, const Mat3& adj_t, std::int64_t val_det);

// Vertex of the sector Q(base, C) at Weyl-vector v from its base.
LatticeClass sector_point(const LatticeClass& base, const Flag& chamber, VectorDistance v);

// All 2(q^2+q+1) vertices adjacent to o, i.e. at vector distance (1,0) or (0,1).
std::vector<LatticeClass> neighbors(const LatticeClass& o);
// Closed ball of CAT(0) radius 2 around o (deduplicated, deterministic order).
std::vector<LatticeClass> ball_radius2(const LatticeClass& o);

// True iff g moves o, both segments [o, g o] and [o, g^-1 o] are regular, and
// their germs at o are opposite chambers of the residue. A true verdict
// certifies that g is a hyperbolic (axial) isometry. Throws unless det g = 1.
bool hyperbolic_certificate(const Mat3& g, const LatticeClass& o);

struct CertificateWitness {
  bool certified = false;
  GermSimplex toward;      // germ of [o, g o]
  GermSimplex backward;    // germ of [o, g^-1 o]
  VectorDistance v_toward;
  VectorDistance v_backward;
};
CertificateWitness hyperbolic_certificate_witness(const Mat3& g, const LatticeClass& o);

// d(g^n o, o) for n = 1..N.
std::vector<double> displacement_profile(const Mat3& g, const LatticeClass& o, int n_max);

}  // namespace cw
