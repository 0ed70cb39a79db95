#include "walls.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace cw {

namespace {

using Tag = Syllable::Tag;

bool is_a_family(Wall::Family f) { return f != Wall::Family::kBLine; }

// First-syllable coordinate of v relative to the wall's flat or line.
std::int64_t entry_coordinate(const Wall& w, const GroupWord& v) {
  GroupWord u = w.prefix.inverse() * v;
  if (u.is_identity()) return 0;
  const Syllable& s = u.syllables().front();
  switch (w.family) {
    case Wall::Family::kAVert:
      return s.tag == Tag::kA ? s.m : 0;
    case Wall::Family::kAHoriz:
      return s.tag == Tag::kA ? s.n : 0;
    case Wall::Family::kBLine:
      return s.tag == Tag::kB ? s.m : 0;
  }
  return 0;
}

Wall make_wall(GroupWord prefix, Wall::Family family, std::int64_t offset2) {
  Wall w;
  w.prefix = std::move(prefix);
  w.family = family;
  w.offset2 = offset2;
  return w;
}

}  // namespace

std::string Wall::str() const {
  std::ostringstream os;
  const char* fam = family == Family::kAVert ? "AV" : family == Family::kAHoriz ? "AH" : "B";
  os << fam << "[" << prefix.str() << "; " << (offset2 >= 0 ? offset2 : offset2) << "/2]";
  return os.str();
}

bool wall_side(const Wall& w, const GroupWord& v) { return 2 * entry_coordinate(w, v) > w.offset2; }

std::pair<GroupWord, GroupWord> wall_dual_pair(const Wall& w) {
  std::int64_t lo = (w.offset2 - 1) / 2;
  std::int64_t hi = lo + 1;
  switch (w.family) {
    case Wall::Family::kAVert:
      return {w.prefix * GroupWord::a(lo, 0), w.prefix * GroupWord::a(hi, 0)};
    case Wall::Family::kAHoriz:
      return {w.prefix * GroupWord::a(0, lo), w.prefix * GroupWord::a(0, hi)};
    case Wall::Family::kBLine:
    default:
      return {w.prefix * GroupWord::b(lo), w.prefix * GroupWord::b(hi)};
  }
}

Wall wall_translate(const GroupWord& h, const Wall& w) {
  GroupWord p = h * w.prefix;
  std::int64_t offset2 = w.offset2;
  if (!p.is_identity()) {
    const Syllable& last = p.syllables().back();
    if (is_a_family(w.family) && last.tag == Tag::kA) {
      offset2 += 2 * (w.family == Wall::Family::kAVert ? last.m : last.n);
      std::vector<Syllable> syl = p.syllables();
      syl.pop_back();
      p = GroupWord::normalize(syl);
    } else if (!is_a_family(w.family) && last.tag == Tag::kB) {
      offset2 += 2 * last.m;
      std::vector<Syllable> syl = p.syllables();
      syl.pop_back();
      p = GroupWord::normalize(syl);
    }
  }
  return make_wall(std::move(p), w.family, offset2);
}

std::vector<Wall> walls_separating(const GroupWord& x, const GroupWord& y) {
  std::vector<Wall> out;
  GroupWord u = x.inverse() * y;
  GroupWord prefix = x;  // walls anchored directly in absolute coordinates
  for (const auto& s : u.syllables()) {
    if (s.tag == Tag::kA) {
      std::int64_t sm = s.m >= 0 ? 1 : -1;
      for (std::int64_t i = 1; i <= std::llabs(s.m); ++i) out.push_back(make_wall(prefix, Wall::Family::kAVert, sm * (2 * i - 1)));
      std::int64_t sn = s.n >= 0 ? 1 : -1;
      for (std::int64_t j = 1; j <= std::llabs(s.n); ++j) out.push_back(make_wall(prefix, Wall::Family::kAHoriz, sn * (2 * j - 1)));
    } else {
      std::int64_t sk = s.m >= 0 ? 1 : -1;
      for (std::int64_t i = 1; i <= std::llabs(s.m); ++i) out.push_back(make_wall(prefix, Wall::Family::kBLine, sk * (2 * i - 1)));
    }
    prefix = prefix * GroupWord::normalize({s});
  }
  // Re-anchor: a prefix ending with the wall's own factor is folded into the
  // offset (happens for the first syllable when x itself ends with that tag).
  for (auto& w : out) w = wall_translate(GroupWord::identity(), w);
  return out;
}

bool are_transverse(const Wall& a, const Wall& b) {
  if (a == b) throw std::invalid_argument("are_transverse: equal walls");
  return is_a_family(a.family) && is_a_family(b.family) && a.family != b.family && a.prefix == b.prefix;
}

namespace {

// Membership of vertex v in the dual-vertex set of an A-wall: v must lie in
// the wall's flat with the matching coordinate.
bool a_wall_touches(const Wall& w, const GroupWord& v) {
  GroupWord u = w.prefix.inverse() * v;
  std::int64_t m = 0, n = 0;
  if (!u.is_identity()) {
    if (u.syllables().size() != 1 || u.syllables().front().tag != Tag::kA) return false;
    m = u.syllables().front().m;
    n = u.syllables().front().n;
  }
  std::int64_t c = (w.family == Wall::Family::kAVert) ? m : n;
  return 2 * c == w.offset2 - 1 || 2 * c == w.offset2 + 1;
}

}  // namespace

bool walls_adjacent(const Wall& a, const Wall& b) {
  bool a_is_a = is_a_family(a.family), b_is_a = is_a_family(b.family);
  if (a_is_a && b_is_a) {
    if (a.prefix != b.prefix) return false;
    if (a.family != b.family) return true;  // transverse walls of one flat share corners
    return std::llabs(a.offset2 - b.offset2) <= 2;
  }
  if (!a_is_a && !b_is_a) {
    if (a.prefix != b.prefix) return false;
    return std::llabs(a.offset2 - b.offset2) <= 2;
  }
  const Wall& aw = a_is_a ? a : b;
  const Wall& bw = a_is_a ? b : a;
  auto [lo, hi] = wall_dual_pair(bw);
  return a_wall_touches(aw, lo) || a_wall_touches(aw, hi);
}

bool is_l_separated(const Wall& a, const Wall& b, std::int64_t l, std::int64_t) {
  if (a == b) throw std::invalid_argument("is_l_separated: equal walls");
  if (are_transverse(a, b)) throw std::invalid_argument("is_l_separated: transverse walls");
  (void)l;
  // Parallel walls of one flat admit the perpendicular family as an
  // arbitrarily long transversal chain; every other disjoint pair admits no
  // common transversal at all.
  bool parallel_in_flat = is_a_family(a.family) && a.family == b.family && a.prefix == b.prefix;
  return !parallel_in_flat;
}

bool chain_compatible(const Wall& a, const Wall& b, std::int64_t l) {
  if (a == b) return false;
  if (are_transverse(a, b)) return false;
  if (walls_adjacent(a, b)) return false;
  return is_l_separated(a, b, l);
}

namespace {

ChainMetricResult longest_chain(const std::vector<Wall>& walls, std::int64_t l) {
  ChainMetricResult r;
  const std::size_t n = walls.size();
  if (n == 0) return r;
  std::vector<std::int64_t> best(n, 1);
  std::vector<int> prev(n, -1);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (best[i] + 1 > best[j] && chain_compatible(walls[i], walls[j], l)) {
        best[j] = best[i] + 1;
        prev[j] = static_cast<int>(i);
      }
  std::size_t arg = 0;
  for (std::size_t j = 1; j < n; ++j)
    if (best[j] > best[arg]) arg = j;
  r.value = best[arg];
  for (int k = static_cast<int>(arg); k >= 0; k = prev[static_cast<std::size_t>(k)]) r.witness_chain.push_back(walls[static_cast<std::size_t>(k)]);
  std::reverse(r.witness_chain.begin(), r.witness_chain.end());
  return r;
}

}  // namespace

ChainMetricResult chain_metric_dl_witness(const GroupWord& x, const GroupWord& y, std::int64_t l) {
  ChainMetricResult r;
  if (x == y) return r;
  std::vector<Wall> walls = walls_separating(x, y);
  if (walls.size() == 1) {
    // One edge apart: within a single wall's thickness, no chain separates.
    r.value = 1;
    return r;
  }
  r = longest_chain(walls, l);
  r.value += 1;
  return r;
}

std::int64_t chain_metric_dl(const GroupWord& x, const GroupWord& y, std::int64_t l) {
  return chain_metric_dl_witness(x, y, l).value;
}

ContractionWitness contraction_certificate_witness(const GroupWord& g, std::int64_t l, std::int64_t power_bound) {
  if (g.is_identity()) throw std::invalid_argument("contraction_certificate: identity element");
  if (power_bound < 2) throw std::invalid_argument("contraction_certificate: power bound must be >= 2");
  ContractionWitness out;
  GroupWord gk = GroupWord::identity();
  for (std::int64_t i = 0; i < power_bound; ++i) gk = gk * g;
  std::vector<Wall> walls = walls_separating(GroupWord::identity(), gk);
  std::vector<GroupWord> powers;
  GroupWord p = g;
  for (std::int64_t n = 1; n <= power_bound; ++n) {
    powers.push_back(p);
    p = p * g;
  }
  for (const Wall& w : walls) {
    auto [near_v, far_v] = wall_dual_pair(w);
    for (std::int64_t n = 1; n <= power_bound; ++n) {
      Wall w2 = wall_translate(powers[static_cast<std::size_t>(n - 1)], w);
      if (!chain_compatible(w, w2, l)) continue;
      // Proper skewering: g^n pushes the w2-side of w strictly beyond w2.
      bool side_of_w_seen_from_w2 = wall_side(w2, near_v);
      const GroupWord& toward = (wall_side(w, far_v) == wall_side(w, wall_dual_pair(w2).first)) ? far_v : near_v;
      GroupWord moved = powers[static_cast<std::size_t>(n - 1)] * toward;
      if (wall_side(w2, moved) != side_of_w_seen_from_w2) {
        out.certified = true;
        out.wall = w;
        out.power = n;
        return out;
      }
    }
  }
  return out;
}

bool contraction_certificate(const GroupWord& g, std::int64_t l, std::int64_t power_bound) {
  return contraction_certificate_witness(g, l, power_bound).certified;
}

}  // namespace cw
