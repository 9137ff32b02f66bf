#pragma once

#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "relpres/htword.hpp"

namespace relpres {

// The canonical phi-presentation
//   < H, t | {p^t = p^phi, p in P \ {1}}, (c t prod_i b_i a_i^t)^k = 1 >
// with H = G^(0) * ... * G^(s), P = copies 0..s-1, P^phi = copies 1..s and
// phi the copy-index shift. m == -1 encodes an empty b/a product.
struct PhiPresentation {
  Group base;
  int s = 0;
  int m = -1;
  int k = 2;
  FPWord c;
  std::vector<FPWord> a;
  std::vector<FPWord> b;

  // Relator period c t b_0 t^-1 a_0 t ... b_m t^-1 a_m t as a cyclic word.
  CycWord period() const {
    CycWord w;
    w.h.push_back(c);
    w.tsign.push_back(1);
    for (int i = 0; i <= m; ++i) {
      w.h.push_back(b[i]);
      w.tsign.push_back(-1);
      w.h.push_back(a[i]);
      w.tsign.push_back(1);
    }
    return w;
  }
};

struct ConditionReport {
  bool cond1 = false;
  bool cond2 = false;
  bool cond3 = false;
  bool cond4 = false;
  std::vector<std::string> notes;

  bool all() const { return cond1 && cond2 && cond3 && cond4; }
};

namespace detail {

// Order of an FP-word in H: finite only when it is conjugate into a single
// factor copy; 0 means infinite.
inline int fp_order(const Group& g, const FPWord& w) {
  FPWord c = fp_cyclic_reduce(g, w);
  if (c.empty()) return 1;
  if (c.size() == 1) return g.element_order(c.syl[0].g);
  return 0;
}

// Strips the maximal leading prefix lying in the factor spanned by copies
// [lo, hi] from the normal form.
inline FPWord strip_leading_prefix(const Group& g, const FPWord& w, int lo, int hi) {
  FPWord r = fp_reduce(g, w);
  std::size_t i = 0;
  while (i < r.size() && r.syl[i].copy >= lo && r.syl[i].copy <= hi) ++i;
  return FPWord(std::vector<Syllable>(r.syl.begin() + i, r.syl.end()));
}

// Small sample of nonidentity elements of the factor spanned by [lo, hi].
inline std::vector<FPWord> subgroup_sample(const Group& g, int lo, int hi) {
  std::vector<FPWord> out;
  for (int copy = lo; copy <= hi && out.size() < 3; ++copy)
    for (int e = 1; e < g.order() && out.size() < 3; ++e)
      out.push_back(FPWord::single(copy, e));
  return out;
}

inline int max_window_sum(const std::vector<int>& n) {
  int best = 0;
  for (std::size_t lo = 0; lo < n.size(); ++lo) {
    int sum = 0;
    for (std::size_t hi = lo; hi < n.size(); ++hi) {
      sum += n[hi];
      best = std::max(best, std::abs(sum));
    }
  }
  return best;
}

// Bounded falsification net for <Q, u> = Q * <u'>: searches for trivial
// alternating products q_0 u^{n_1} q_1 ... u^{n_r} q_r with r <= 4,
// |n_j| <= 3 (n_j not killed by the order of u), q_j from `sample`
// (interior q_j nonidentity, the two end slots may be empty). A trivial
// product is legitimate when the small-order consequence covers it
// (min nonidentity order of G <= max window sum of the n_j); the net
// reports false only on a collapse violating that bound. Products are
// built depth-first with a length prune: once the running normal form is
// longer than everything that can still cancel it, the branch dies.
inline bool alternating_products_stay_nontrivial(const Group& g, const FPWord& u,
                                                 const std::vector<FPWord>& sample) {
  const int max_r = 4;
  int ord = fp_order(g, u);
  int min_order = g.min_nonidentity_order();
  std::vector<std::pair<int, FPWord>> powers;
  for (int n = -3; n <= 3; ++n) {
    if (n == 0) continue;
    if (ord > 0 && std::abs(n) % ord == 0) continue;  // trivial in Q * <u'> too
    FPWord p;
    FPWord step = n > 0 ? u : fp_inverse(g, u);
    for (int j = 0; j < std::abs(n); ++j) p = fp_mul(g, p, step);
    if (p.empty()) continue;
    powers.emplace_back(n, p);
  }
  std::size_t max_pow_len = 0;
  for (const auto& [n, p] : powers) max_pow_len = std::max(max_pow_len, p.size());

  bool violated = false;
  std::vector<int> exps;
  auto rec = [&](auto&& self, const FPWord& prefix, int depth) -> void {
    if (violated) return;
    for (const auto& [n, p] : powers) {
      FPWord w = fp_mul(g, prefix, p);
      exps.push_back(n);
      bool trivial = w.empty();
      for (const auto& q : sample) trivial = trivial || fp_mul(g, w, q).empty();
      if (trivial && min_order > max_window_sum(exps)) {
        violated = true;
        exps.pop_back();
        return;
      }
      if (depth + 1 < max_r) {
        std::size_t capacity = (max_r - depth - 1) * (max_pow_len + 1) + 1;
        if (w.size() <= capacity)
          for (const auto& q : sample) self(self, fp_mul(g, w, q), depth + 1);
      }
      exps.pop_back();
    }
  };
  std::vector<FPWord> starts = sample;
  starts.push_back(FPWord());
  for (const FPWord& q0 : starts) {
    rec(rec, q0, 0);
    if (violated) return false;
  }
  return true;
}

}  // namespace detail

// Checks Lemma-1 conditions 1, 2, 4 exactly and condition 3 by the bounded
// enumeration net. Report-only; never throws.
inline ConditionReport verify_lemma1_conditions(const PhiPresentation& p) {
  const Group& g = p.base;
  ConditionReport r;
  r.cond1 = p.m >= 0;
  if (!r.cond1) r.notes.push_back("condition 1: m < 0 (empty relator product)");

  r.cond2 = true;
  for (int i = 0; i <= p.m; ++i) {
    if (fp_in_copies(g, p.a[i], 0, p.s - 1)) {
      r.cond2 = false;
      r.notes.push_back("condition 2: a_" + std::to_string(i) + " lies in P");
    }
    if (fp_in_copies(g, p.b[i], 1, p.s)) {
      r.cond2 = false;
      r.notes.push_back("condition 2: b_" + std::to_string(i) + " lies in P^phi");
    }
  }

  r.cond4 = p.s >= 0;
  auto in_H = [&](const FPWord& w) { return fp_in_copies(g, w, 0, p.s); };
  if (!in_H(p.c)) r.cond4 = false;
  for (int i = 0; i <= p.m; ++i)
    if (!in_H(p.a[i]) || !in_H(p.b[i])) r.cond4 = false;
  if (!r.cond4) r.notes.push_back("condition 4: coefficients use copies outside 0..s");

  r.cond3 = true;
  if (r.cond2 && r.cond4) {
    auto sampleP = detail::subgroup_sample(g, 0, p.s - 1);
    auto samplePhi = detail::subgroup_sample(g, 1, p.s);
    for (int i = 0; i <= p.m; ++i) {
      FPWord ap = detail::strip_leading_prefix(g, p.a[i], 0, p.s - 1);
      if (!detail::alternating_products_stay_nontrivial(g, ap, sampleP)) {
        r.cond3 = false;
        r.notes.push_back("condition 3: collapse found for a_" + std::to_string(i));
      }
      FPWord bp = detail::strip_leading_prefix(g, p.b[i], 1, p.s);
      if (!detail::alternating_products_stay_nontrivial(g, bp, samplePhi)) {
        r.cond3 = false;
        r.notes.push_back("condition 3: collapse found for b_" + std::to_string(i));
      }
    }
  } else {
    r.cond3 = false;
    r.notes.push_back("condition 3: skipped, conditions 2/4 already fail");
  }
  return r;
}

struct CorollaryResult {
  bool is_trivial = false;
  int bound = 0;
  bool corollary_holds = true;
};

// Evaluates a_i^{n_1} p_1 ... a_i^{n_r} p_r in H and checks the small-order
// consequence: triviality forces the minimal nonidentity order of G to be
// at most max_{k<=l} |sum_{j=k}^{l} n_j|.
inline CorollaryResult corollary_bound_check(const PhiPresentation& p, int i,
                                             const std::vector<int>& exponents,
                                             const std::vector<FPWord>& elements) {
  const Group& g = p.base;
  if (i < 0 || i > p.m) throw Error("PreconditionViolated", "index i out of range");
  if (exponents.empty() || exponents.size() != elements.size())
    throw Error("PreconditionViolated", "need matching nonempty n_j / p_j sequences");
  std::size_t r = exponents.size();
  for (std::size_t j = 0; j < r; ++j) {
    if (exponents[j] == 0) throw Error("PreconditionViolated", "n_j must be nonzero");
    if (j + 1 != r && fp_reduce(g, elements[j]).empty())
      throw Error("PreconditionViolated", "interior p_j must be nonidentity");
    if (!fp_in_copies(g, elements[j], 0, p.s - 1))
      throw Error("PreconditionViolated", "p_j must lie in P");
  }
  FPWord ai = p.a[i];
  FPWord ai_inv = fp_inverse(g, ai);
  FPWord w;
  for (std::size_t j = 0; j < r; ++j) {
    const FPWord& step = exponents[j] > 0 ? ai : ai_inv;
    for (int q = 0; q < std::abs(exponents[j]); ++q) w = fp_mul(g, w, step);
    w = fp_mul(g, w, elements[j]);
  }
  CorollaryResult res;
  res.is_trivial = w.empty();
  for (std::size_t lo = 0; lo < r; ++lo) {
    int sum = 0;
    for (std::size_t hi = lo; hi < r; ++hi) {
      sum += exponents[hi];
      res.bound = std::max(res.bound, std::abs(sum));
    }
  }
  if (res.is_trivial) res.corollary_holds = g.min_nonidentity_order() <= res.bound;
  return res;
}

}  // namespace relpres
