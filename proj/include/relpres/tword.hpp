#pragma once

#include <algorithm>
#include <compare>
#include <vector>

#include "relpres/group.hpp"

namespace relpres {

// One letter of a word in G * <t>: either a coefficient (t == 0, g holds
// the element index) or t^{+1} / t^{-1} (t == +1 / -1, g unused).
struct TLetter {
  int t = 0;
  int g = 0;
  static TLetter coeff(int g) { return {0, g}; }
  static TLetter tpow(int e) { return {e, 0}; }
  bool is_t() const { return t != 0; }
  friend auto operator<=>(const TLetter&, const TLetter&) = default;
};

struct TWord {
  std::vector<TLetter> letters;

  TWord() = default;
  explicit TWord(std::vector<TLetter> l) : letters(std::move(l)) {}

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }
  friend auto operator<=>(const TWord&, const TWord&) = default;
};

inline int t_exponent_sum(const TWord& w) {
  int s = 0;
  for (const auto& l : w.letters) s += l.t;
  return s;
}

inline int t_letter_count(const TWord& w) {
  int n = 0;
  for (const auto& l : w.letters)
    if (l.is_t()) ++n;
  return n;
}

// Free reduction in G * <t>: merges adjacent coefficients through the
// group table, drops identities and cancelling t-pairs.
inline TWord t_free_reduce(const Group& g, const TWord& w) {
  // Stack reduction; the stack is freely reduced at every step, so each
  // incoming letter interacts with the top only.
  std::vector<TLetter> st;
  for (TLetter l : w.letters) {
    for (;;) {
      if (!l.is_t() && l.g == 0) break;
      if (st.empty()) {
        st.push_back(l);
        break;
      }
      TLetter b = st.back();
      if (!b.is_t() && !l.is_t()) {
        st.pop_back();
        l = TLetter::coeff(g.mul(b.g, l.g));
        continue;
      }
      if (b.is_t() && l.is_t() && b.t == -l.t) {
        st.pop_back();
        break;
      }
      st.push_back(l);
      break;
    }
  }
  return TWord(std::move(st));
}

inline TWord t_mul(const Group& g, const TWord& a, const TWord& b) {
  TWord c = a;
  c.letters.insert(c.letters.end(), b.letters.begin(), b.letters.end());
  return t_free_reduce(g, c);
}

inline TWord t_inverse(const Group& g, const TWord& w) {
  TWord out;
  out.letters.reserve(w.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    if (it->is_t())
      out.letters.push_back(TLetter::tpow(-it->t));
    else
      out.letters.push_back(TLetter::coeff(g.inverse(it->g)));
  }
  return out;
}

inline TWord t_power(const Group& g, int n) {
  TWord out;
  int e = n >= 0 ? 1 : -1;
  for (int i = 0; i < (n >= 0 ? n : -n); ++i) out.letters.push_back(TLetter::tpow(e));
  return t_free_reduce(g, out);
}

// Cyclically reduced representative of the conjugacy class in G * <t>.
inline TWord t_cyclic_reduce(const Group& g, const TWord& w) {
  TWord r = t_free_reduce(g, w);
  for (;;) {
    if (r.size() < 2) break;
    const TLetter& f = r.letters.front();
    const TLetter& b = r.letters.back();
    bool cancels = (f.is_t() && b.is_t() && f.t == -b.t) || (!f.is_t() && !b.is_t());
    if (!cancels) break;
    std::rotate(r.letters.begin(), r.letters.end() - 1, r.letters.end());
    TWord r2 = t_free_reduce(g, r);
    if (r2.size() >= r.size()) {
      // coefficient rotation that does not shorten: restore and stop
      std::rotate(r.letters.begin(), r.letters.begin() + 1, r.letters.end());
      break;
    }
    r = r2;
  }
  return r;
}

// Deterministic canonical rotation: least lexicographic under the fixed
// letter order (coefficients by element index, then t^{+1}, then t^{-1}).
inline TWord t_least_rotation(const TWord& w) {
  if (w.size() <= 1) return w;
  auto key = [](const TLetter& l) { return l.is_t() ? (l.t == 1 ? 1000000 : 1000001) : l.g; };
  auto less = [&](const TWord& a, const TWord& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (key(a.letters[i]) != key(b.letters[i])) return key(a.letters[i]) < key(b.letters[i]);
    }
    return false;
  };
  TWord best = w;
  TWord cur = w;
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::rotate(cur.letters.begin(), cur.letters.begin() + 1, cur.letters.end());
    if (less(cur, best)) best = cur;
  }
  return best;
}

// Conjugacy in G * <t> by cyclic normal form comparison.
inline bool t_conjugate(const Group& g, const TWord& a, const TWord& b) {
  TWord ca = t_cyclic_reduce(g, a);
  TWord cb = t_cyclic_reduce(g, b);
  if (ca.size() != cb.size()) return false;
  if (ca.size() == 1 && !ca.letters[0].is_t() && !cb.letters[0].is_t()) {
    for (int x = 0; x < g.order(); ++x)
      if (g.mul(g.mul(g.inverse(x), ca.letters[0].g), x) == cb.letters[0].g) return true;
    return false;
  }
  return t_least_rotation(ca) == t_least_rotation(cb);
}

}  // namespace relpres
