#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cw {

// Normal-form element of Z^2 * Z. A syllables carry a nonzero pair (m, n)
// from the Z^2 factor, B syllables a nonzero integer from the Z factor;
// adjacent syllables alternate tags and the empty word is the identity.
struct Syllable {
  enum class Tag : std::uint8_t { kA, kB };
  Tag tag = Tag::kA;
  std::int64_t m = 0;  // A: first coordinate, B: the exponent
  std::int64_t n = 0;  // A only

  bool operator==(const Syllable& o) const { return tag == o.tag && m == o.m && n == o.n; }
};

class GroupWord {
 public:
  GroupWord() = default;

  static GroupWord identity() { return GroupWord(); }
  static GroupWord a(std::int64_t m, std::int64_t n);
  static GroupWord b(std::int64_t k);
  // Free-product normal form of an arbitrary syllable list: merge adjacent
  // same-tag syllables, drop zero syllables, repeat.
  static GroupWord normalize(const std::vector<Syllable>& raw);

  bool is_identity() const { return syl_.empty(); }
  const std::vector<Syllable>& syllables() const { return syl_; }

  GroupWord operator*(const GroupWord& o) const;
  void append(const Syllable& s);  // right-multiply by one syllable, in place
  GroupWord inverse() const;

  // Word norm for the standard generators: |m|+|n| per A syllable, |k| per B.
  std::int64_t length() const;

  bool operator==(const GroupWord& o) const { return syl_ == o.syl_; }
  bool operator!=(const GroupWord& o) const { return !(*this == o); }
  bool operator<(const GroupWord& o) const;  // arbitrary total order, for keys

  std::string str() const;  // "e" or e.g. "A(1,0).B(2).A(-1,3)"
  static GroupWord parse(const std::string& text);

  std::size_t hash() const;

 private:
  std::vector<Syllable> syl_;
};

std::int64_t word_distance(const GroupWord& g, const GroupWord& h);

struct GroupWordHash {
  std::size_t operator()(const GroupWord& w) const { return w.hash(); }
};

// All group elements with word norm <= radius, identity first,
// breadth-first and deterministic.
std::vector<GroupWord> ball(std::int64_t radius);

}  // namespace cw
