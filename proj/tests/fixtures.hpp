#pragma once

#include "relpres/diagram.hpp"

namespace relpres::fixtures {

// s = 0 presentation over a cyclic group: c = b0 = a0 = g, relator
// (g t g t^-1 g t)^k.
inline PhiPresentation cyclic_pillow_presentation(int order, int k) {
  PhiPresentation p;
  p.base = Group::cyclic(order);
  p.s = 0;
  p.m = 0;
  p.k = k;
  p.c = FPWord::single(0, 1);
  p.a = {FPWord::single(0, 1)};
  p.b = {FPWord::single(0, 1)};
  return p;
}

// Sphere with one interior face carrying period^k and one exterior face:
// face A = darts 0..3k-1, face B = darts 3k..6k-1, theta(i) = 6k-1-i.
inline HowieDiagram cyclic_pillow(int order, int k) {
  PhiPresentation p = cyclic_pillow_presentation(order, k);
  const int n = 3 * k;
  std::vector<int> theta(2 * n);
  for (int i = 0; i < 2 * n; ++i) theta[i] = 2 * n - 1 - i;
  std::vector<int> a_face(n), b_face(n);
  for (int i = 0; i < n; ++i) {
    a_face[i] = i;
    b_face[i] = n + i;
  }
  const int period_sign[3] = {1, -1, 1};
  std::vector<int> forward;
  for (int i = 0; i < n; ++i) forward.push_back(period_sign[i % 3] == 1 ? i : 2 * n - 1 - i);
  int ginv = p.base.inverse(1);
  std::vector<FPWord> a_labels, b_labels;
  for (int i = 0; i < n; ++i) {
    a_labels.push_back(FPWord::single(0, 1));
    b_labels.push_back(FPWord::single(0, ginv));
  }
  SurfaceMap m = SurfaceMap::build(2 * n, theta, {a_face, b_face});
  return HowieDiagram::build(std::move(m), forward, {a_labels, b_labels}, {1}, {}, p);
}

inline HowieDiagram z3_pillow(int k = 2) { return cyclic_pillow(3, k); }

// Sphere made of a relator face and its mirror (LargePos + LargeNeg); one
// exterior vertex at the (++)/(--) pair. Every vertex pairs a corner of A
// with its inverse in B, so the diagram is legal but never reduced.
inline HowieDiagram mirror_pillow(const PhiPresentation& p) {
  CycWord pos = cyc_power(p.period(), p.k);
  const int n = static_cast<int>(pos.size());
  std::vector<int> theta(2 * n);
  for (int i = 0; i < 2 * n; ++i) theta[i] = 2 * n - 1 - i;
  std::vector<int> forward, a_face(n), b_face(n);
  std::vector<FPWord> b_labels;
  for (int i = 0; i < n; ++i) {
    forward.push_back(pos.tsign[i] == 1 ? i : 2 * n - 1 - i);
    a_face[i] = i;
    b_face[i] = n + i;
    b_labels.push_back(fp_inverse(p.base, pos.h[(n - i) % n]));
  }
  SurfaceMap m = SurfaceMap::build(2 * n, theta, {a_face, b_face});
  return HowieDiagram::build(std::move(m), forward, {pos.h, b_labels}, {}, {0}, p);
}

inline HowieDiagram z2_mirror_pillow() { return mirror_pillow(cyclic_pillow_presentation(2, 2)); }

// s = 0, m = 1, k = 2 presentation over Z3, all letters g; its mirror pillow
// exercises the stopping schedules.
inline PhiPresentation z3_m1_presentation() {
  PhiPresentation p;
  p.base = Group::cyclic(3);
  p.s = 0;
  p.m = 1;
  p.k = 2;
  p.c = FPWord::single(0, 1);
  p.a = {FPWord::single(0, 1), FPWord::single(0, 1)};
  p.b = {FPWord::single(0, 1), FPWord::single(0, 1)};
  return p;
}

inline HowieDiagram z3_mirror_pillow_m1() { return mirror_pillow(z3_m1_presentation()); }

// s = 1 presentation over Z2 from the five-t-letter word (g t)^3 (g t^-1)^2:
// c = g^(1), b0 = g^(1) g^(0) g^(1), a0 = g^(1).
inline PhiPresentation z2_deep_presentation() {
  PhiPresentation p;
  p.base = Group::cyclic(2);
  p.s = 1;
  p.m = 0;
  p.k = 2;
  p.c = FPWord::single(1, 1);
  p.b = {FPWord({{1, 1}, {0, 1}, {1, 1}})};
  p.a = {FPWord::single(1, 1)};
  return p;
}

// s = 1 presentation over Z3 from the same word shape with elements 1,2,1,2,1.
inline PhiPresentation z3_deep_presentation() {
  PhiPresentation p;
  p.base = Group::cyclic(3);
  p.s = 1;
  p.m = 0;
  p.k = 2;
  p.c = FPWord::single(1, 2);
  p.b = {FPWord({{1, 1}, {0, 2}, {1, 1}})};
  p.a = {FPWord::single(1, 1)};
  return p;
}

// Two digons glued into a sphere over the s = 1 presentation; labels are
// mutually inverse, so the diagram is neither reduced nor phi-reduced.
// One exterior vertex.
inline HowieDiagram two_digon_sphere() {
  PhiPresentation p = z3_deep_presentation();
  SurfaceMap m = SurfaceMap::build(4, {3, 2, 1, 0}, {{0, 1}, {2, 3}});
  std::vector<FPWord> a_labels = {FPWord::single(1, 2), FPWord::single(0, 1)};
  std::vector<FPWord> b_labels = {FPWord::single(1, 1), FPWord::single(0, 2)};
  return HowieDiagram::build(std::move(m), {3, 1}, {a_labels, b_labels}, {}, {0}, p);
}

// Mirror pillow over the s = 1 Z2 presentation with a digon spliced into the
// edge at the (++)/(--) vertex. The digon becomes special and the interior
// vertex {(D,0),(A,1),(B,5)} gets positive curvature and a nontrivial label,
// exhibiting the configuration the curvature audit must flag.
inline HowieDiagram digon_spliced_pillow() {
  PhiPresentation p = z2_deep_presentation();
  std::vector<int> theta(14);
  for (int i = 0; i < 12; ++i) theta[i] = 11 - i;
  theta[0] = 12;
  theta[12] = 0;
  theta[11] = 13;
  theta[13] = 11;
  std::vector<std::vector<int>> faces = {{0, 1, 2, 3, 4, 5}, {6, 7, 8, 9, 10, 11}, {12, 13}};
  std::vector<int> forward = {0, 10, 2, 3, 7, 5, 13};
  FPWord c = p.c, b0 = p.b[0], a0 = p.a[0];
  std::vector<FPWord> a_labels = {c, b0, a0, c, b0, a0};
  std::vector<FPWord> b_labels = {c, a0, b0, c, a0, b0};  // inverses equal themselves in Z2
  std::vector<FPWord> d_labels = {FPWord::single(1, 1), FPWord::single(0, 1)};
  SurfaceMap m = SurfaceMap::build(14, theta, faces);
  return HowieDiagram::build(std::move(m), forward, {a_labels, b_labels, d_labels}, {}, {0}, p);
}

}  // namespace relpres::fixtures
