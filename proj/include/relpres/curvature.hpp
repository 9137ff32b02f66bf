#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "relpres/diagram.hpp"
#include "relpres/rational.hpp"
#include "relpres/rewrite.hpp"

namespace relpres {

class WeightAssignment {
 public:
  void set(Corner c, Rational v) { nu_[key(c)] = v; }
  bool has(Corner c) const { return nu_.count(key(c)) != 0; }
  const Rational& at(Corner c) const {
    auto it = nu_.find(key(c));
    if (it == nu_.end())
      throw Error("MissingWeight", "corner (" + std::to_string(c.face) + ", " +
                                       std::to_string(c.pos) + ") has no weight");
    return it->second;
  }

 private:
  static std::pair<int, int> key(Corner c) { return {c.face, c.pos}; }
  std::map<std::pair<int, int>, Rational> nu_;
};

// Combinatorial Gauss-Bonnet: K(v) = 2 - sum nu(c), K(f) = 2 - sum (1 - nu(c)),
// K(e) = 0; the total equals 2 chi(S) for any weights.
struct CurvatureReport {
  std::vector<Rational> vertex_k;
  std::vector<Rational> face_k;
  Rational total;
  int chi = 0;
  bool matches() const { return total == Rational(2 * chi); }
};

inline CurvatureReport gauss_bonnet_report(const SurfaceMap& m, const WeightAssignment& nu) {
  CurvatureReport rep;
  rep.chi = m.euler_characteristic();
  for (const auto& orbit : m.vertices()) {
    Rational k(2);
    for (const Corner& c : orbit) k -= nu.at(c);
    rep.vertex_k.push_back(k);
    rep.total += k;
  }
  for (int f = 0; f < m.face_count(); ++f) {
    Rational k(2);
    for (int pos = 0; pos < m.degree(f); ++pos) k -= Rational(1) - nu.at({f, pos});
    rep.face_k.push_back(k);
    rep.total += k;
  }
  return rep;
}

namespace detail {

// For each face: -1 unless it is a special digon, in which case the position
// of its positive corner. A digon is special when both faces across its edges
// are interior and one corner's rotation neighbors have types (++) and (--),
// one each; if both corners qualify (corrupted input) the first one wins.
inline std::vector<int> special_positive(const HowieDiagram& d, const std::vector<FaceKind>& kinds) {
  std::vector<int> out(d.map().face_count(), -1);
  for (int f = 0; f < d.map().face_count(); ++f) {
    if (kinds[f].kind != FaceKind::Digon) continue;
    bool interior_neighbors = true;
    for (int dart : d.map().face(f))
      if (d.face_exterior(d.map().face_of(d.map().theta(dart)))) interior_neighbors = false;
    if (!interior_neighbors) continue;
    for (int pos = 0; pos < 2 && out[f] < 0; ++pos) {
      Corner c{f, pos};
      int v = d.vertex_of(c);
      const auto& orbit = d.vertices()[v];
      int n = static_cast<int>(orbit.size());
      int i = 0;
      while (orbit[i] != c) ++i;
      CornerType prev = corner_type(d, orbit[(i + n - 1) % n]);
      CornerType next = corner_type(d, orbit[(i + 1) % n]);
      if ((prev == CornerType::PP && next == CornerType::MM) ||
          (prev == CornerType::MM && next == CornerType::PP))
        out[f] = pos;
    }
  }
  return out;
}

}  // namespace detail

// nu = 0 on nonspecial digon corners and on (++)/(--) corners of interior
// faces, -1 on the negative corner of a special digon, 1 otherwise.
inline WeightAssignment section5_weights(const HowieDiagram& d) {
  auto kinds = classify_faces(d);
  for (int f = 0; f < d.map().face_count(); ++f)
    if (kinds[f].kind == FaceKind::Illegal)
      throw Error("UnclassifiedFace", "face " + std::to_string(f));
  auto special = detail::special_positive(d, kinds);
  WeightAssignment nu;
  for (int f = 0; f < d.map().face_count(); ++f) {
    for (int pos = 0; pos < d.map().degree(f); ++pos) {
      Corner c{f, pos};
      Rational v(1);
      if (kinds[f].kind == FaceKind::Digon) {
        if (special[f] < 0)
          v = Rational(0);
        else if (pos != special[f])
          v = Rational(-1);
      } else if (kinds[f].kind != FaceKind::Exterior) {
        CornerType t = corner_type(d, c);
        if (t == CornerType::PP || t == CornerType::MM) v = Rational(0);
      }
      nu.set(c, v);
    }
  }
  return nu;
}

// Per-vertex corner census: n negative / p positive special-digon corners,
// l light corners of large faces, x exterior-face corners; the identity
// K(v) = 2 + n - l - p - x is rechecked against the weights.
struct VertexCensus {
  int n = 0, l = 0, p = 0, x = 0;
  Rational k;
};

inline VertexCensus vertex_census(const HowieDiagram& d, const WeightAssignment& nu, int v) {
  auto kinds = classify_faces(d);
  auto special = detail::special_positive(d, kinds);
  VertexCensus out;
  Rational k(2);
  for (const Corner& c : d.vertices()[v]) {
    k -= nu.at(c);
    if (kinds[c.face].kind == FaceKind::Exterior) {
      ++out.x;
    } else if (kinds[c.face].kind == FaceKind::Digon) {
      if (special[c.face] < 0) continue;
      if (c.pos == special[c.face])
        ++out.p;
      else
        ++out.n;
    } else {
      CornerType t = corner_type(d, c);
      if (t == CornerType::PM || t == CornerType::MP) ++out.l;
    }
  }
  out.k = k;
  if (k != Rational(2 + out.n - out.l - out.p - out.x))
    throw Error("CensusMismatch", "vertex " + std::to_string(v) + ": K = " + k.str() +
                                      " but census gives " +
                                      std::to_string(2 + out.n - out.l - out.p - out.x));
  return out;
}

// Interior vertices: positive curvature (reported with its source/sink case),
// census bound l >= 2n, and rotation-adjacent (++)/(--) corners, which only
// occur next to a reducible pair.
inline std::vector<std::string> interior_curvature_audit(const HowieDiagram& d) {
  std::vector<std::string> findings;
  WeightAssignment nu = section5_weights(d);
  for (int v = 0; v < static_cast<int>(d.vertices().size()); ++v) {
    VertexCensus c = vertex_census(d, nu, v);
    if (c.l < 2 * c.n)
      findings.push_back("CensusBound: vertex " + std::to_string(v) + " has l = " +
                         std::to_string(c.l) + " < 2n = " + std::to_string(2 * c.n));
    bool interior = !d.vertex_exterior(v) && c.x == 0;
    if (!interior) continue;
    if (c.k > Rational(0)) {
      std::string kase = (c.n == 1 && c.l == 2) ? "n=1,l=2"
                         : (c.n == 0 && c.l <= 1) ? "n=0,l<=1"
                                                  : "unexpected";
      findings.push_back("PositiveInteriorVertex: vertex " + std::to_string(v) + " K = " +
                         c.k.str() + " case " + kase + " label " + fp_str(vertex_label(d, v)));
    }
    const auto& orbit = d.vertices()[v];
    int sz = static_cast<int>(orbit.size());
    bool adjacent_heavy = false;
    for (int i = 0; i < sz; ++i) {
      CornerType a = corner_type(d, orbit[i]);
      CornerType b = corner_type(d, orbit[(i + 1) % sz]);
      bool ha = a == CornerType::PP || a == CornerType::MM;
      bool hb = b == CornerType::PP || b == CornerType::MM;
      if (ha && hb) adjacent_heavy = true;
    }
    if (adjacent_heavy)
      findings.push_back("AdjacentHeavyCorners: vertex " + std::to_string(v));
  }
  return findings;
}

struct IsoperimetricVerdict {
  long long lhs = 0;
  long long rhs = 4;
  int perimeter = 0;
  int large_faces = 0;
  bool holds() const { return lhs >= rhs; }
};

inline IsoperimetricVerdict isoperimetric_inequality_k3(int k, int perimeter, int large_faces) {
  IsoperimetricVerdict v;
  v.perimeter = perimeter;
  v.large_faces = large_faces;
  v.lhs = 2LL * perimeter - static_cast<long long>(k - 2) * large_faces + 2;
  return v;
}

// 2 * perimeter - (k - 2) * (number of large interior faces) + 2 >= 4,
// for k >= 3, one exterior face, no exterior vertices.
inline IsoperimetricVerdict isoperimetric_check_k3(const HowieDiagram& d) {
  if (d.presentation().k < 3)
    throw Error("WrongShape", "k = " + std::to_string(d.presentation().k) + " < 3");
  if (d.exterior_faces().size() != 1 || !d.exterior_vertices().empty())
    throw Error("WrongShape", "need exactly one exterior face and no exterior vertices");
  auto kinds = classify_faces(d);
  int large = 0;
  for (const auto& kind : kinds)
    if (kind.kind == FaceKind::LargePos || kind.kind == FaceKind::LargeNeg) ++large;
  return isoperimetric_inequality_k3(d.presentation().k, d.map().degree(d.exterior_faces()[0]),
                                     large);
}

}  // namespace relpres
