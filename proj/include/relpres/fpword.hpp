#pragma once

#include <algorithm>
#include <compare>
#include <vector>

#include "relpres/error.hpp"
#include "relpres/group.hpp"

namespace relpres {

// One letter of a word in H = G^(0) * G^(1) * ... : a nonidentity element
// of the copy of G with the given index.
struct Syllable {
  int copy = 0;
  int g = 0;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

// A word in the free product of indexed copies of G. Values produced by
// fp_reduce are in normal form: no identity syllables, no two consecutive
// syllables in the same copy.
struct FPWord {
  std::vector<Syllable> syl;

  FPWord() = default;
  explicit FPWord(std::vector<Syllable> s) : syl(std::move(s)) {}
  static FPWord single(int copy, int g) { return FPWord({{copy, g}}); }

  bool empty() const { return syl.empty(); }
  std::size_t size() const { return syl.size(); }
  friend auto operator<=>(const FPWord&, const FPWord&) = default;
};

inline FPWord fp_reduce(const Group& g, const FPWord& w) {
  FPWord out;
  for (Syllable s : w.syl) {
    if (s.g == 0) continue;
    if (!out.syl.empty() && out.syl.back().copy == s.copy) {
      int prod = g.mul(out.syl.back().g, s.g);
      out.syl.pop_back();
      if (prod != 0) out.syl.push_back({s.copy, prod});
    } else {
      out.syl.push_back(s);
    }
  }
  return out;
}

inline FPWord fp_mul(const Group& g, const FPWord& a, const FPWord& b) {
  FPWord c = a;
  c.syl.insert(c.syl.end(), b.syl.begin(), b.syl.end());
  return fp_reduce(g, c);
}

inline FPWord fp_inverse(const Group& g, const FPWord& w) {
  FPWord out;
  out.syl.reserve(w.size());
  for (auto it = w.syl.rbegin(); it != w.syl.rend(); ++it)
    out.syl.push_back({it->copy, g.inverse(it->g)});
  return out;
}

// Shift isomorphism phi^d: copy index i -> i + d.
inline FPWord fp_shift(const FPWord& w, int d) {
  FPWord out = w;
  for (auto& s : out.syl) s.copy += d;
  return out;
}

// Membership in the free factor spanned by copies [lo, hi]; reduces first.
inline bool fp_in_copies(const Group& g, const FPWord& w, int lo, int hi) {
  FPWord r = fp_reduce(g, w);
  return std::all_of(r.syl.begin(), r.syl.end(),
                     [&](const Syllable& s) { return s.copy >= lo && s.copy <= hi; });
}

// Normal form of the conjugacy class: cyclically reduced (first and last
// syllables in distinct copies, or length <= 1).
inline FPWord fp_cyclic_reduce(const Group& g, const FPWord& w) {
  FPWord r = fp_reduce(g, w);
  while (r.size() >= 2 && r.syl.front().copy == r.syl.back().copy) {
    // rotate the last syllable to the front and re-reduce
    std::rotate(r.syl.begin(), r.syl.end() - 1, r.syl.end());
    FPWord r2 = fp_reduce(g, r);
    if (r2.size() >= r.size()) break;
    r = r2;
  }
  return r;
}

inline FPWord fp_least_rotation(const FPWord& w) {
  if (w.size() <= 1) return w;
  FPWord best = w;
  FPWord cur = w;
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::rotate(cur.syl.begin(), cur.syl.begin() + 1, cur.syl.end());
    if (cur < best) best = cur;
  }
  return best;
}

// Conjugacy in the free product: cyclically reduced forms agree up to
// rotation; single syllables additionally up to conjugation inside their
// own factor copy.
inline bool fp_conjugate(const Group& g, const FPWord& a, const FPWord& b) {
  FPWord ca = fp_cyclic_reduce(g, a);
  FPWord cb = fp_cyclic_reduce(g, b);
  if (ca.size() != cb.size()) return false;
  if (ca.size() == 1) {
    if (ca.syl[0].copy != cb.syl[0].copy) return false;
    for (int x = 0; x < g.order(); ++x)
      if (g.mul(g.mul(g.inverse(x), ca.syl[0].g), x) == cb.syl[0].g) return true;
    return false;
  }
  return fp_least_rotation(ca) == fp_least_rotation(cb);
}

}  // namespace relpres
