#pragma once

#include <vector>

#include "relpres/fpword.hpp"
#include "relpres/tword.hpp"

namespace relpres {

// Linear word over H ∪ {t^±1}: h0 t^{s0} h1 t^{s1} ... h_{n-1} t^{s_{n-1}} h_n,
// with n = tsign.size() and h.size() == n + 1. Coefficient parts may be empty.
struct HtWord {
  std::vector<FPWord> h{FPWord()};
  std::vector<int> tsign;

  static HtWord from_fp(const FPWord& w) {
    HtWord out;
    out.h[0] = w;
    return out;
  }
  static HtWord t(int sign) {
    HtWord out;
    out.tsign.push_back(sign);
    out.h.push_back(FPWord());
    return out;
  }

  bool trivial_shape() const { return tsign.empty() && h[0].empty(); }
  int t_count() const { return static_cast<int>(tsign.size()); }
  friend bool operator==(const HtWord&, const HtWord&) = default;
};

// Cyclic word over H ∪ {t^±1}: ∏ h_i t^{s_i}, indices mod n. Used for relator
// periods and face boundary labels (read anticlockwise, corner after edge).
struct CycWord {
  std::vector<FPWord> h;
  std::vector<int> tsign;

  std::size_t size() const { return tsign.size(); }
  friend bool operator==(const CycWord&, const CycWord&) = default;
};

inline HtWord ht_concat(const Group& g, const HtWord& a, const HtWord& b) {
  HtWord out = a;
  out.h.back() = fp_mul(g, out.h.back(), b.h.front());
  out.tsign.insert(out.tsign.end(), b.tsign.begin(), b.tsign.end());
  out.h.insert(out.h.end(), b.h.begin() + 1, b.h.end());
  return out;
}

inline HtWord ht_inverse(const Group& g, const HtWord& w) {
  HtWord out;
  out.h.clear();
  for (auto it = w.h.rbegin(); it != w.h.rend(); ++it) out.h.push_back(fp_inverse(g, *it));
  for (auto it = w.tsign.rbegin(); it != w.tsign.rend(); ++it) out.tsign.push_back(-*it);
  return out;
}

// Britton reduction in <H, t | p^t = p^phi, p in P> with P spanning copies
// [0, s-1] and P^phi copies [1, s]. Pinches t^-1 p t -> p^phi and
// t q t^-1 -> q^{phi^-1}, leftmost first, to a fixpoint. With s == 0 both
// subgroups are trivial and this is plain free reduction in H * <t>.
inline HtWord britton_reduce(const Group& g, int s, HtWord w) {
  for (auto& part : w.h) part = fp_reduce(g, part);
  for (;;) {
    bool changed = false;
    for (std::size_t i = 0; i + 1 < w.tsign.size(); ++i) {
      const FPWord& mid = w.h[i + 1];
      int shift = 0;
      if (w.tsign[i] == -1 && w.tsign[i + 1] == 1 && fp_in_copies(g, mid, 0, s - 1))
        shift = 1;
      else if (w.tsign[i] == 1 && w.tsign[i + 1] == -1 && fp_in_copies(g, mid, 1, s))
        shift = -1;
      if (shift == 0) continue;
      FPWord merged = fp_mul(g, w.h[i], fp_mul(g, fp_shift(mid, shift), w.h[i + 2]));
      w.h.erase(w.h.begin() + i + 1, w.h.begin() + i + 3);
      w.h[i] = merged;
      w.tsign.erase(w.tsign.begin() + i, w.tsign.begin() + i + 2);
      changed = true;
      break;
    }
    if (!changed) return w;
  }
}

inline bool ht_trivial(const Group& g, int s, const HtWord& w) {
  return britton_reduce(g, s, w).trivial_shape();
}

// Image under g^(i) -> t^-i g t^i, t -> t, freely reduced in G * <t>.
inline TWord ht_embed_fp(const Group& g, const FPWord& w) {
  TWord out;
  for (const Syllable& s : w.syl) {
    for (int j = 0; j < s.copy; ++j) out.letters.push_back(TLetter::tpow(-1));
    out.letters.push_back(TLetter::coeff(s.g));
    for (int j = 0; j < s.copy; ++j) out.letters.push_back(TLetter::tpow(1));
  }
  return t_free_reduce(g, out);
}

inline TWord ht_embed(const Group& g, const HtWord& w) {
  TWord out;
  for (std::size_t i = 0; i < w.h.size(); ++i) {
    TWord part = ht_embed_fp(g, w.h[i]);
    out.letters.insert(out.letters.end(), part.letters.begin(), part.letters.end());
    if (i < w.tsign.size()) out.letters.push_back(TLetter::tpow(w.tsign[i]));
  }
  return t_free_reduce(g, out);
}

inline TWord cyc_embed(const Group& g, const CycWord& w) {
  TWord out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    TWord part = ht_embed_fp(g, w.h[i]);
    out.letters.insert(out.letters.end(), part.letters.begin(), part.letters.end());
    out.letters.push_back(TLetter::tpow(w.tsign[i]));
  }
  return t_free_reduce(g, out);
}

inline CycWord cyc_rotate(const CycWord& w, std::size_t start) {
  CycWord out;
  std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    out.h.push_back(w.h[(start + i) % n]);
    out.tsign.push_back(w.tsign[(start + i) % n]);
  }
  return out;
}

// (h0 t^{s0} ... h_{n-1} t^{s_{n-1}})^-1, re-aligned to the h-then-t
// convention by starting the cyclic reading at h0^-1.
inline CycWord cyc_inverse(const Group& g, const CycWord& w) {
  CycWord out;
  std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    out.h.push_back(fp_inverse(g, w.h[(n - i) % n]));
    out.tsign.push_back(-w.tsign[n - 1 - i]);
  }
  return out;
}

// Repeats the cyclic word k times.
inline CycWord cyc_power(const CycWord& w, int k) {
  CycWord out;
  for (int r = 0; r < k; ++r) {
    out.h.insert(out.h.end(), w.h.begin(), w.h.end());
    out.tsign.insert(out.tsign.end(), w.tsign.begin(), w.tsign.end());
  }
  return out;
}

// Equality of cyclic words up to rotation (exact parts, no reduction).
inline bool cyc_equal_up_to_rotation(const CycWord& a, const CycWord& b) {
  if (a.size() != b.size()) return false;
  std::size_t n = a.size();
  if (n == 0) return a.h == b.h;
  for (std::size_t r = 0; r < n; ++r) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      ok = a.h[i] == b.h[(r + i) % n] && a.tsign[i] == b.tsign[(r + i) % n];
    if (ok) return true;
  }
  return false;
}

// Linear reading of a cyclic word starting at index `start`.
inline HtWord cyc_to_linear(const CycWord& w, std::size_t start) {
  HtWord out;
  out.h.clear();
  std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    out.h.push_back(w.h[(start + i) % n]);
    out.tsign.push_back(w.tsign[(start + i) % n]);
  }
  out.h.push_back(FPWord());
  return out;
}

}  // namespace relpres
