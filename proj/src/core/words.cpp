#include "words.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace cw {

GroupWord GroupWord::a(std::int64_t m, std::int64_t n) {
  GroupWord w;
  if (m != 0 || n != 0) w.syl_.push_back(Syllable{Syllable::Tag::kA, m, n});
  return w;
}

GroupWord GroupWord::b(std::int64_t k) {
  GroupWord w;
  if (k != 0) w.syl_.push_back(Syllable{Syllable::Tag::kB, k, 0});
  return w;
}

void GroupWord::append(const Syllable& s) {
  bool zero = (s.tag == Syllable::Tag::kA) ? (s.m == 0 && s.n == 0) : (s.m == 0);
  if (zero) return;
  if (!syl_.empty() && syl_.back().tag == s.tag) {
    Syllable& top = syl_.back();
    top.m += s.m;
    if (s.tag == Syllable::Tag::kA) top.n += s.n;
    bool now_zero = (top.tag == Syllable::Tag::kA) ? (top.m == 0 && top.n == 0) : (top.m == 0);
    if (now_zero) syl_.pop_back();
    return;
  }
  syl_.push_back(s);
}

GroupWord GroupWord::normalize(const std::vector<Syllable>& raw) {
  GroupWord w;
  for (const auto& s : raw) w.append(s);
  return w;
}

GroupWord GroupWord::operator*(const GroupWord& o) const {
  GroupWord w = *this;
  for (const auto& s : o.syl_) w.append(s);
  return w;
}

GroupWord GroupWord::inverse() const {
  GroupWord w;
  w.syl_.reserve(syl_.size());
  for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) w.syl_.push_back(Syllable{it->tag, -it->m, -it->n});
  return w;
}

std::int64_t GroupWord::length() const {
  std::int64_t len = 0;
  for (const auto& s : syl_) {
    len += std::llabs(s.m);
    if (s.tag == Syllable::Tag::kA) len += std::llabs(s.n);
  }
  return len;
}

bool GroupWord::operator<(const GroupWord& o) const {
  if (syl_.size() != o.syl_.size()) return syl_.size() < o.syl_.size();
  for (std::size_t i = 0; i < syl_.size(); ++i) {
    const auto& x = syl_[i];
    const auto& y = o.syl_[i];
    if (x.tag != y.tag) return x.tag < y.tag;
    if (x.m != y.m) return x.m < y.m;
    if (x.n != y.n) return x.n < y.n;
  }
  return false;
}

std::string GroupWord::str() const {
  if (syl_.empty()) return "e";
  std::ostringstream os;
  bool first = true;
  for (const auto& s : syl_) {
    if (!first) os << ".";
    first = false;
    if (s.tag == Syllable::Tag::kA)
      os << "A(" << s.m << "," << s.n << ")";
    else
      os << "B(" << s.m << ")";
  }
  return os.str();
}

GroupWord GroupWord::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty() || s == "e" || s == "E" || s == "1") return identity();
  std::vector<Syllable> raw;
  std::size_t i = 0;
  auto read_int = [&](const char* what) {
    std::size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw std::invalid_argument(std::string("expected ") + what + " in group word: " + text);
    return std::stoll(s.substr(start, i - start));
  };
  while (i < s.size()) {
    char tag = s[i];
    if (tag != 'A' && tag != 'B' && tag != 'a' && tag != 'b') throw std::invalid_argument("expected syllable tag A or B in group word: " + text);
    ++i;
    if (i >= s.size() || s[i] != '(') throw std::invalid_argument("expected '(' in group word: " + text);
    ++i;
    if (tag == 'A' || tag == 'a') {
      std::int64_t m = read_int("integer");
      if (i >= s.size() || s[i] != ',') throw std::invalid_argument("A syllable needs two coordinates: " + text);
      ++i;
      std::int64_t n = read_int("integer");
      if (i >= s.size() || s[i] != ')') throw std::invalid_argument("expected ')' in group word: " + text);
      ++i;
      raw.push_back(Syllable{Syllable::Tag::kA, m, n});
    } else {
      std::int64_t k = read_int("integer");
      if (i >= s.size() || s[i] != ')') throw std::invalid_argument("expected ')' in group word: " + text);
      ++i;
      raw.push_back(Syllable{Syllable::Tag::kB, k, 0});
    }
    if (i < s.size()) {
      if (s[i] != '.') throw std::invalid_argument("expected '.' between syllables: " + text);
      ++i;
    }
  }
  return normalize(raw);
}

std::size_t GroupWord::hash() const {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  for (const auto& s : syl_) {
    mix(static_cast<std::uint64_t>(s.tag));
    mix(static_cast<std::uint64_t>(s.m));
    mix(static_cast<std::uint64_t>(s.n));
  }
  return h;
}

std::int64_t word_distance(const GroupWord& g, const GroupWord& h) { return (g.inverse() * h).length(); }

std::vector<GroupWord> ball(std::int64_t radius) {
  std::vector<GroupWord> out{GroupWord::identity()};
  std::unordered_set<GroupWord, GroupWordHash> seen{GroupWord::identity()};
  const GroupWord gens[6] = {GroupWord::a(1, 0), GroupWord::a(-1, 0), GroupWord::a(0, 1),
                             GroupWord::a(0, -1), GroupWord::b(1), GroupWord::b(-1)};
  std::size_t frontier_begin = 0;
  for (std::int64_t r = 1; r <= radius; ++r) {
    std::size_t frontier_end = out.size();
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      for (const auto& g : gens) {
        GroupWord w = out[i] * g;
        if (w.length() != r) continue;
        if (seen.insert(w).second) out.push_back(w);
      }
    }
    frontier_begin = frontier_end;
  }
  return out;
}

}  // namespace cw
