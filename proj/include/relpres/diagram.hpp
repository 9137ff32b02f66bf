#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "relpres/presentation.hpp"
#include "relpres/surface_map.hpp"

namespace relpres {

enum class CornerType { PP, MM, PM, MP };

inline std::string corner_type_str(CornerType t) {
  switch (t) {
    case CornerType::PP: return "++";
    case CornerType::MM: return "--";
    case CornerType::PM: return "+-";
    default: return "-+";
  }
}

// A Howie diagram over the phi-presentation: a surface map whose edges are
// all labeled t (one dart per edge marked as the forward traversal), with an
// FPWord label on every corner and distinguished exterior faces/vertices.
class HowieDiagram {
 public:
  static HowieDiagram build(SurfaceMap map, const std::vector<int>& forward_darts,
                            std::vector<std::vector<FPWord>> corner_labels,
                            std::vector<int> exterior_faces, std::vector<int> exterior_vertices,
                            PhiPresentation pres) {
    HowieDiagram d{std::move(map), {}, std::move(corner_labels), std::move(exterior_faces),
                   std::move(exterior_vertices), std::move(pres)};
    d.forward_.assign(d.map_.dart_count(), 0);
    if (static_cast<int>(forward_darts.size()) != d.map_.edge_count())
      throw Error("BadDiagram", "need one forward dart per edge");
    for (int f : forward_darts) {
      if (f < 0 || f >= d.map_.dart_count() || d.forward_[f] || d.forward_[d.map_.theta(f)])
        throw Error("BadDiagram", "forward dart " + std::to_string(f));
      d.forward_[f] = 1;
    }
    if (static_cast<int>(d.corner_labels_.size()) != d.map_.face_count())
      throw Error("BadDiagram", "corner labels must match faces");
    for (int f = 0; f < d.map_.face_count(); ++f) {
      if (static_cast<int>(d.corner_labels_[f].size()) != d.map_.degree(f))
        throw Error("BadDiagram", "corner labels of face " + std::to_string(f));
      for (auto& w : d.corner_labels_[f]) w = fp_reduce(d.pres_.base, w);
    }
    d.vertices_ = d.map_.vertices();
    for (int v : d.exterior_vertices_)
      if (v < 0 || v >= static_cast<int>(d.vertices_.size()))
        throw Error("BadDiagram", "exterior vertex out of range");
    for (int f : d.exterior_faces_)
      if (f < 0 || f >= d.map_.face_count())
        throw Error("BadDiagram", "exterior face out of range");
    return d;
  }

  const SurfaceMap& map() const { return map_; }
  const PhiPresentation& presentation() const { return pres_; }
  int sign(int dart) const { return forward_[dart] ? 1 : -1; }
  const FPWord& corner_label(Corner c) const { return corner_labels_[c.face][c.pos]; }
  const std::vector<std::vector<Corner>>& vertices() const { return vertices_; }
  const std::vector<int>& exterior_faces() const { return exterior_faces_; }
  const std::vector<int>& exterior_vertices() const { return exterior_vertices_; }

  bool face_exterior(int f) const {
    return std::find(exterior_faces_.begin(), exterior_faces_.end(), f) != exterior_faces_.end();
  }
  bool vertex_exterior(int v) const {
    return std::find(exterior_vertices_.begin(), exterior_vertices_.end(), v) !=
           exterior_vertices_.end();
  }

  int vertex_of(Corner c) const {
    for (int v = 0; v < static_cast<int>(vertices_.size()); ++v)
      for (const Corner& x : vertices_[v])
        if (x == c) return v;
    return -1;
  }

 private:
  HowieDiagram(SurfaceMap map, std::vector<char> forward,
               std::vector<std::vector<FPWord>> labels, std::vector<int> ext_faces,
               std::vector<int> ext_verts, PhiPresentation pres)
      : map_(std::move(map)),
        forward_(std::move(forward)),
        corner_labels_(std::move(labels)),
        exterior_faces_(std::move(ext_faces)),
        exterior_vertices_(std::move(ext_verts)),
        pres_(std::move(pres)) {}

  SurfaceMap map_;
  std::vector<char> forward_;
  std::vector<std::vector<FPWord>> corner_labels_;
  std::vector<int> exterior_faces_;
  std::vector<int> exterior_vertices_;
  PhiPresentation pres_;
  std::vector<std::vector<Corner>> vertices_;
};

// Cyclic face boundary word: entry i is (label of corner i, sign of dart i),
// read anticlockwise; startGap rotates the representative.
inline CycWord face_label(const HowieDiagram& d, int f, int start_gap = 0) {
  CycWord w;
  int n = d.map().degree(f);
  for (int i = 0; i < n; ++i) {
    int j = (start_gap + i) % n;
    w.h.push_back(d.corner_label({f, j}));
    w.tsign.push_back(d.sign(d.map().face(f)[j]));
  }
  return w;
}

// Product of corner labels around the vertex in rotation order, reduced;
// triviality up to the base point choice is fp_cyclic_reduce(...).empty().
inline FPWord vertex_label(const HowieDiagram& d, int v) {
  FPWord out;
  for (const Corner& c : d.vertices()[v]) out = fp_mul(d.presentation().base, out, d.corner_label(c));
  return out;
}

inline bool vertex_trivial(const HowieDiagram& d, int v) {
  return fp_cyclic_reduce(d.presentation().base, vertex_label(d, v)).empty();
}

// First sign: incoming dart traversed along its edge's forward direction;
// second sign: same for the outgoing dart.
inline CornerType corner_type(const HowieDiagram& d, Corner c) {
  bool in = d.sign(d.map().incoming_dart(c)) == 1;
  bool out = d.sign(d.map().outgoing_dart(c)) == 1;
  if (in) return out ? CornerType::PP : CornerType::PM;
  return out ? CornerType::MP : CornerType::MM;
}

struct FaceKind {
  enum Kind { Digon, LargePos, LargeNeg, Exterior, Illegal };
  Kind kind = Illegal;
  FPWord p;        // Digon: the pinched element of P
  int offset = 0;  // LargePos / LargeNeg: position of a (++) / (--) corner
};

inline FaceKind classify_face(const HowieDiagram& d, int f) {
  const Group& g = d.presentation().base;
  if (d.face_exterior(f)) return {FaceKind::Exterior, {}, 0};
  CycWord label = face_label(d, f);
  int n = static_cast<int>(label.size());

  if (n == 2) {
    // digon: p^{-phi} t^-1 p t with p in P \ {1}
    for (int i = 0; i < 2; ++i) {
      if (label.tsign[i] != -1 || label.tsign[1 - i] != 1) continue;
      const FPWord& p = label.h[1 - i];      // between t^-1 and t
      const FPWord& q = label.h[i];          // between t and t^-1
      if (p.empty()) continue;
      if (!fp_in_copies(g, p, 0, d.presentation().s - 1)) continue;
      if (!fp_mul(g, q, fp_shift(p, 1)).empty()) continue;
      return {FaceKind::Digon, p, 0};
    }
  }
  CycWord pos = cyc_power(d.presentation().period(), d.presentation().k);
  if (static_cast<int>(pos.size()) == n) {
    for (int r = 0; r < n; ++r) {
      if (cyc_rotate(label, r) == pos) return {FaceKind::LargePos, {}, r};
    }
    CycWord neg = cyc_inverse(g, pos);
    for (int r = 0; r < n; ++r) {
      if (cyc_rotate(label, r) == neg) return {FaceKind::LargeNeg, {}, r};
    }
  }
  return {FaceKind::Illegal, {}, 0};
}

inline std::vector<FaceKind> classify_faces(const HowieDiagram& d) {
  std::vector<FaceKind> out;
  for (int f = 0; f < d.map().face_count(); ++f) out.push_back(classify_face(d, f));
  return out;
}

struct ReducednessReport {
  bool reduced = true;
  bool phi_reduced = true;
  // offending (faceA, faceB, forward dart of the shared edge)
  std::vector<std::array<int, 3>> mirror_pairs;
  std::vector<std::array<int, 3>> digon_pairs;
};

namespace detail {

// Linear boundary reading of face f beginning with the edge letter of the
// dart at position pos: t^{e_pos} label(c_{pos+1}) ... label(c_pos).
inline HtWord read_from_dart(const HowieDiagram& d, int f, int pos) {
  HtWord w;
  int n = d.map().degree(f);
  for (int i = 0; i < n; ++i) {
    int j = (pos + i) % n;
    w.tsign.push_back(d.sign(d.map().face(f)[j]));
    w.h.push_back(d.corner_label({f, (j + 1) % n}));
  }
  return w;
}

// Linear boundary reading of face f ending with the edge letter at pos:
// label(c_{pos+1}) t^{e_{pos+1}} ... label(c_pos) t^{e_pos}.
inline HtWord read_to_dart(const HowieDiagram& d, int f, int pos) {
  int n = d.map().degree(f);
  HtWord w = cyc_to_linear(face_label(d, f, (pos + 1) % n), 0);
  return w;
}

}  // namespace detail

inline ReducednessReport reducedness_check(const HowieDiagram& d) {
  const Group& g = d.presentation().base;
  ReducednessReport rep;
  auto kinds = classify_faces(d);
  for (int dart = 0; dart < d.map().dart_count(); ++dart) {
    if (d.sign(dart) != 1) continue;  // one orientation per edge
    int other = d.map().theta(dart);
    int fa = d.map().face_of(dart);
    int fb = d.map().face_of(other);
    if (fa == fb || d.face_exterior(fa) || d.face_exterior(fb)) continue;
    HtWord start_a = detail::read_from_dart(d, fa, d.map().pos_of(dart));
    HtWord end_b = detail::read_to_dart(d, fb, d.map().pos_of(other));
    if (start_a == ht_inverse(g, end_b)) {
      rep.reduced = false;
      rep.mirror_pairs.push_back({fa, fb, dart});
    }
    if (kinds[fa].kind == FaceKind::Digon && kinds[fb].kind == FaceKind::Digon) {
      rep.phi_reduced = false;
      rep.digon_pairs.push_back({fa, fb, dart});
    }
  }
  if (!rep.reduced) rep.phi_reduced = false;
  return rep;
}

struct DiagramReport {
  std::vector<std::string> findings;
  bool ok() const { return findings.empty(); }
};

// Aggregate legality: exterior marking shape, interior face classification,
// interior vertex triviality, sphericity.
inline DiagramReport validate_diagram(const HowieDiagram& d) {
  DiagramReport rep;
  std::size_t ef = d.exterior_faces().size();
  std::size_t ev = d.exterior_vertices().size();
  if (ef + ev != 1)
    rep.findings.push_back("ExteriorMarking: need exactly one exterior face or vertex");
  auto kinds = classify_faces(d);
  for (int f = 0; f < d.map().face_count(); ++f)
    if (kinds[f].kind == FaceKind::Illegal)
      rep.findings.push_back("IllegalFace: face " + std::to_string(f));
  for (int v = 0; v < static_cast<int>(d.vertices().size()); ++v)
    if (!d.vertex_exterior(v) && !vertex_trivial(d, v))
      rep.findings.push_back("InteriorVertexNontrivial: vertex " + std::to_string(v));
  if (d.map().euler_characteristic() != 2)
    rep.findings.push_back("NotSphere: chi = " + std::to_string(d.map().euler_characteristic()));
  return rep;
}

}  // namespace relpres
