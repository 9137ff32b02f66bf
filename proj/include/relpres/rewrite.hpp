#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relpres/presentation.hpp"

namespace relpres {

inline std::string fp_str(const FPWord& w) {
  if (w.empty()) return "e";
  std::string out;
  for (const Syllable& s : w.syl) {
    if (!out.empty()) out += ' ';
    out += 'g' + std::to_string(s.g) + "^(" + std::to_string(s.copy) + ')';
  }
  return out;
}

inline std::string cyc_str(const CycWord& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += fp_str(w.h[i]);
    out += w.tsign[i] == 1 ? " t" : " t^-1";
  }
  return out + ")";
}

// w is conjugate to a single t-letter with one coefficient; the relative
// group splits as a plain free product with a finite cyclic factor.
struct FreeProductCase {
  int coefficient = 0;
};

struct RewriteMove {
  std::string kind;  // Conjugate | ReduceM | ReduceS
  std::string before;
  std::string after;
};

struct RewriteResult {
  std::optional<PhiPresentation> presentation;
  std::optional<FreeProductCase> free_product;
  TWord source_cyclic;
  std::vector<RewriteMove> trace;
};

namespace detail {

// One Britton pinch pass on a cyclic word: finds the leftmost t^{s_i} h t^{s_j}
// fragment that pinches, rotates it to the front, splices. Runs to a fixpoint.
inline CycWord cyc_pinch_fixpoint(const Group& g, int s, CycWord w,
                                  std::vector<RewriteMove>* trace) {
  for (auto& part : w.h) part = fp_reduce(g, part);
  for (;;) {
    std::size_t n = w.size();
    if (n < 2) return w;
    bool changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t j = (i + 1) % n;
      const FPWord& mid = w.h[j];
      int shift = 0;
      if (w.tsign[i] == -1 && w.tsign[j] == 1 && fp_in_copies(g, mid, 0, s - 1))
        shift = 1;
      else if (w.tsign[i] == 1 && w.tsign[j] == -1 && fp_in_copies(g, mid, 1, s))
        shift = -1;
      if (shift == 0) continue;
      std::string before;
      if (trace) before = cyc_str(w);
      // rotate so the pinched pair sits at positions 0,1, then splice
      CycWord r = cyc_rotate(w, i);
      CycWord next;
      next.h.push_back(fp_mul(g, fp_mul(g, r.h[0], fp_shift(mid, shift)),
                              n > 2 ? r.h[2] : FPWord()));
      next.tsign.push_back(r.tsign[2 % n]);
      for (std::size_t q = 3; q < n; ++q) {
        next.h.push_back(r.h[q]);
        next.tsign.push_back(r.tsign[q]);
      }
      if (n == 2) {
        // both t-letters vanish; keep the residue as a single h with no t
        next.h = {fp_mul(g, fp_mul(g, r.h[0], fp_shift(mid, shift)), FPWord())};
        next.tsign.clear();
      }
      w = next;
      if (trace) trace->push_back({"ReduceM", before, cyc_str(w)});
      changed = true;
      break;
    }
    if (!changed) return w;
  }
}

// A legal form-(1) sign pattern is a rotation of + (- +)^{m+1}: no two
// adjacent -1, exactly one adjacent +1 pair when there is more than one
// letter. The single-letter pattern (+) is the m == -1 form.
inline bool legal_pattern(const std::vector<int>& tsign) {
  std::size_t n = tsign.size();
  int plus = 0;
  for (int s : tsign) plus += s == 1;
  if (plus != static_cast<int>(n) - plus + 1) return false;
  if (n == 1) return true;
  int pp = 0;
  for (std::size_t i = 0; i < n; ++i) {
    int a = tsign[i], b = tsign[(i + 1) % n];
    if (a == -1 && b == -1) return false;
    if (a == 1 && b == 1) ++pp;
  }
  return pp == 1;
}

// Replaces every syllable of copy s by t^-1 (same element, copy s-1) t.
inline CycWord push_top_copy_down(const CycWord& w, int s) {
  CycWord out;
  FPWord cur;
  auto flush = [&](int tsign) {
    out.h.push_back(cur);
    out.tsign.push_back(tsign);
    cur = FPWord();
  };
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (const Syllable& y : w.h[i].syl) {
      if (y.copy == s) {
        flush(-1);
        cur.syl.push_back({s - 1, y.g});
        flush(1);
      } else {
        cur.syl.push_back(y);
      }
    }
    flush(w.tsign[i]);
  }
  // fold the trailing accumulator into the front part (cyclic word)
  if (!cur.empty() && !out.h.empty()) {
    cur.syl.insert(cur.syl.end(), out.h[0].syl.begin(), out.h[0].syl.end());
    out.h[0] = cur;
  }
  return out;
}

}  // namespace detail

// Rewrites a unimodular w in G * <t> with exponent k >= 2 into the canonical
// form (1), or detects the free product case (single t-letter). Throws
// NotUnimodular when the exponent sum is not 1 and NonMinimal when the
// reduction cannot reach a legal form (a bug signal, not an input class).
inline RewriteResult lemma1_rewrite(const Group& g, const TWord& w, int k) {
  if (k < 2) throw Error("PreconditionViolated", "relator exponent k must be >= 2");
  RewriteResult res;
  TWord wc = t_cyclic_reduce(g, w);
  if (t_exponent_sum(wc) != 1) throw Error("NotUnimodular", "t-exponent sum is not 1");
  res.source_cyclic = wc;
  if (wc != t_free_reduce(g, w))
    res.trace.push_back({"Conjugate", "", "cyclically reduced form"});

  if (t_letter_count(wc) == 1) {
    FreeProductCase fp;
    for (const TLetter& l : wc.letters)
      if (!l.is_t()) fp.coefficient = l.g;
    res.free_product = fp;
    return res;
  }

  // Level normalisation: a coefficient read after prefix t-exponent e lands
  // in copy -e; shift all copies so the least one is 0.
  std::vector<Syllable> leveled;
  int e = 0;
  for (const TLetter& l : wc.letters) {
    if (l.is_t())
      e += l.t;
    else
      leveled.push_back({-e, l.g});
  }
  int lo = leveled.front().copy;
  for (const Syllable& y : leveled) lo = std::min(lo, y.copy);
  int s = 0;
  FPWord c;
  for (Syllable y : leveled) {
    y.copy -= lo;
    s = std::max(s, y.copy);
    c.syl.push_back(y);
  }
  res.trace.push_back({"Conjugate", cyc_str(CycWord{{c}, {1}}),
                       "levels shifted into copies 0.." + std::to_string(s)});

  CycWord word;
  word.h = {fp_reduce(g, c)};
  word.tsign = {1};
  word = detail::cyc_pinch_fixpoint(g, s, word, &res.trace);

  // Push the top copy down while the resulting cyclic sign pattern stays a
  // legal rotation of + (- +)^{m+1}; an illegal pattern means copy s is
  // genuinely needed and the move is reverted.
  while (s > 0) {
    CycWord candidate =
        detail::cyc_pinch_fixpoint(g, s - 1, detail::push_top_copy_down(word, s), nullptr);
    if (!detail::legal_pattern(candidate.tsign)) break;
    res.trace.push_back({"ReduceS", cyc_str(word), cyc_str(candidate)});
    word = candidate;
    --s;
  }

  std::size_t n = word.size();
  if (!detail::legal_pattern(word.tsign) || n < 3 || n % 2 == 0)
    throw Error("NonMinimal", "reduction did not reach the canonical form");

  std::size_t start = n;
  for (std::size_t i = 0; i < n; ++i)
    if (word.tsign[(i + n - 1) % n] == 1 && word.tsign[i] == 1) start = i;
  CycWord canon = cyc_rotate(word, start);

  PhiPresentation p;
  p.base = g;
  p.s = s;
  p.m = static_cast<int>((n - 3) / 2);
  p.k = k;
  p.c = canon.h[0];
  for (std::size_t i = 1; i < n; i += 2) {
    p.b.push_back(canon.h[i]);
    p.a.push_back(canon.h[i + 1]);
    if (fp_in_copies(g, p.a.back(), 0, s - 1) || fp_in_copies(g, p.b.back(), 1, s))
      throw Error("NonMinimal", "pinch fixpoint left a coefficient inside P");
  }
  res.presentation = p;
  return res;
}

inline HtWord britton_reduce(const Group& g, const PhiPresentation& p, const HtWord& w) {
  return britton_reduce(g, p.s, w);
}

// Free (non-pinching) reduction in H * <t>: the s == 0 case of Britton
// reduction, where both pinch subgroups are trivial.
inline HtWord ht_free_reduce(const Group& g, const HtWord& w) {
  return britton_reduce(g, 0, w);
}

struct Prop1Factor {
  enum Tag { Digon, LargePos, LargeNeg };
  Tag tag = Digon;
  FPWord p;  // Digon only: the pinched element of P
  HtWord conjugator;
};

struct Prop1Factorization {
  std::vector<Prop1Factor> factors;
};

struct Prop1Transport {
  std::vector<std::pair<TWord, int>> pairs;  // (conjugator image, sign)
  TWord image;                               // embed image of u, freely reduced
};

namespace detail {

inline HtWord prop1_relator(const Group& g, const PhiPresentation& p, const Prop1Factor& f) {
  if (f.tag == Prop1Factor::Digon) {
    HtWord r;
    r.h = {FPWord(), fp_reduce(g, f.p), fp_inverse(g, fp_shift(fp_reduce(g, f.p), 1))};
    r.tsign = {-1, 1};
    return r;
  }
  HtWord r = cyc_to_linear(cyc_power(p.period(), p.k), 0);
  return f.tag == Prop1Factor::LargePos ? r : ht_inverse(g, r);
}

}  // namespace detail

// Checks that u equals the formal product of conjugated relators in H * <t>,
// then pushes everything through g^(i) -> t^-i g t^i. Digon factors map to
// freely trivial words and are absorbed; each large factor contributes one
// (conjugator, sign) pair whose expanded product freely reduces to the image
// of u in G * <t>.
inline Prop1Transport proposition1_transport(const Group& g, const HtWord& u,
                                             const Prop1Factorization& f,
                                             const PhiPresentation& p) {
  HtWord prod;
  for (const Prop1Factor& fac : f.factors) {
    HtWord conj = ht_concat(g, ht_concat(g, fac.conjugator, detail::prop1_relator(g, p, fac)),
                            ht_inverse(g, fac.conjugator));
    prod = ht_concat(g, prod, conj);
  }
  if (ht_free_reduce(g, prod) != ht_free_reduce(g, u))
    throw Error("FactorizationInvalid", "factors do not multiply to u in H * <t>");

  Prop1Transport out;
  out.image = ht_embed(g, u);
  TWord relator_image = cyc_embed(g, cyc_power(p.period(), p.k));
  TWord expanded;
  for (const Prop1Factor& fac : f.factors) {
    if (fac.tag == Prop1Factor::Digon) {
      if (!ht_embed(g, detail::prop1_relator(g, p, fac)).empty())
        throw Error("FactorizationInvalid", "digon relator image is not freely trivial");
      continue;
    }
    int sign = fac.tag == Prop1Factor::LargePos ? 1 : -1;
    TWord x = ht_embed(g, fac.conjugator);
    out.pairs.emplace_back(x, sign);
    TWord body = sign == 1 ? relator_image : t_inverse(g, relator_image);
    expanded = t_mul(g, expanded, t_mul(g, t_mul(g, x, body), t_inverse(g, x)));
  }
  if (expanded != out.image)
    throw Error("TransportMismatch", "expanded large factors do not reproduce u");
  return out;
}

struct EmbedResult {
  TWord image;
  bool conjugate_to_source = false;
};

// Sends the relator period back into G * <t> via g^(i) -> t^-i g t^i and
// compares it with the rewriting source up to conjugacy.
inline EmbedResult embed_to_base(const PhiPresentation& p, const TWord& source) {
  EmbedResult out;
  out.image = cyc_embed(p.base, p.period());
  out.conjugate_to_source = t_conjugate(p.base, out.image, source);
  return out;
}

}  // namespace relpres
