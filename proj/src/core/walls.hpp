#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "words.hpp"

namespace cw {

// Combinatorial hyperplane of the tree-of-flats complex. A-family walls live
// in the flat prefix * Z^2 (vertical walls separate by the first coordinate,
// horizontal ones by the second); B-family walls are dual to single edges of
// the line prefix * <B>. Offsets are half-integers stored doubled, and the
// prefix is the shortest coset anchor: it never ends with a syllable of the
// wall's own factor.
struct Wall {
  enum class Family : std::uint8_t { kAVert, kAHoriz, kBLine };
  GroupWord prefix;
  Family family = Family::kBLine;
  std::int64_t offset2 = 1;  // doubled offset, odd

  bool operator==(const Wall& o) const { return family == o.family && offset2 == o.offset2 && prefix == o.prefix; }
  bool operator!=(const Wall& o) const { return !(*this == o); }
  std::string str() const;
};

// Side of the wall containing the vertex: true for the positive side
// (coordinate above the offset).
bool wall_side(const Wall& w, const GroupWord& v);

// The two endpoints of a dual edge of the wall, on the negative and positive
// side respectively.
std::pair<GroupWord, GroupWord> wall_dual_pair(const Wall& w);

// Left translation h . w, re-anchored to the canonical prefix.
Wall wall_translate(const GroupWord& h, const Wall& w);

// Walls with x and y on opposite sides, listed in crossing order along the
// normal-form path from x to y; the count equals word_distance(x, y).
std::vector<Wall> walls_separating(const GroupWord& x, const GroupWord& y);

// Walls are transverse iff they are distinct same-flat A-walls of different
// directions (all four halfspace intersections nonempty). Throws on equal.
bool are_transverse(const Wall& a, const Wall& b);

// Walls share a vertex of a dual edge (the combinatorial thickness relation
// that chain members must avoid).
bool walls_adjacent(const Wall& a, const Wall& b);

// Exact L-separation: every chain transverse to both walls has size <= L.
// In this complex only parallel walls of one flat admit transversal chains,
// and those admit arbitrarily long ones, so the verdict does not depend on L.
// search_radius only bounds oracle-mode enumeration in tests. Throws on equal
// or transverse input.
bool is_l_separated(const Wall& a, const Wall& b, std::int64_t l, std::int64_t search_radius = 0);

// Whether two separating walls may occur together in an L-chain: disjoint
// (non-adjacent), non-transverse (hence nested) and L-separated.
bool chain_compatible(const Wall& a, const Wall& b, std::int64_t l);

struct ChainMetricResult {
  std::int64_t value = 0;
  std::vector<Wall> witness_chain;
};

// Chain metric d_L: 0 on equal points, 1 on adjacent vertices (no chain fits
// between vertices one edge apart), else 1 + the largest L-chain of walls
// separating x from y.
std::int64_t chain_metric_dl(const GroupWord& x, const GroupWord& y, std::int64_t l);
ChainMetricResult chain_metric_dl_witness(const GroupWord& x, const GroupWord& y, std::int64_t l);

struct ContractionWitness {
  bool certified = false;
  Wall wall;            // valid when certified
  std::int64_t power = 0;  // g^power skewers the pair (wall, g^power wall)
};

// Genevois skewering certificate: some wall crossed by [o, g^K o] is mapped
// by a power g^n (n <= K) to a properly nested, disjoint, L-separated copy.
// True certifies that g is a contracting isometry. Throws on identity input.
bool contraction_certificate(const GroupWord& g, std::int64_t l, std::int64_t power_bound);
ContractionWitness contraction_certificate_witness(const GroupWord& g, std::int64_t l, std::int64_t power_bound);

}  // namespace cw
