#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "relpres/curvature.hpp"
#include "relpres/diagram.hpp"
#include "relpres/rational.hpp"

namespace relpres {

// Closed time interval [a, b] on the circle of time; a == b is an instant.
struct TimeSpan {
  Rational a, b;
  friend bool operator==(const TimeSpan& x, const TimeSpan& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator<(const TimeSpan& x, const TimeSpan& y) {
    return x.a < y.a || (x.a == y.a && x.b < y.b);
  }
};

// One linear stretch of a car: position pos0 + vel * (t - t0) for t in
// [t0, t1], measured anticlockwise along the face boundary with corner i
// at position i (so the dart at position i spans [i, i + 1]).
struct MotionPiece {
  Rational t0, t1, pos0, vel;
};

struct CarSchedule {
  int face = 0;
  Rational circumference;
  std::vector<MotionPiece> pieces;

  Rational position_at(Rational t, Rational length) const {
    t = t.mod(length);
    for (const auto& p : pieces)
      if (p.t0 <= t && t <= p.t1) return (p.pos0 + p.vel * (t - p.t0)).mod(circumference);
    throw Error("BadSchedule", "time " + t.str() + " not covered");
  }
};

struct MultipleMotion {
  Rational period;  // T
  Rational length;  // L = k * T, the circle of time
  std::vector<std::vector<CarSchedule>> cars;  // per face
};

namespace detail {

// Union of spans, merged and sorted.
inline std::vector<TimeSpan> merge_spans(std::vector<TimeSpan> spans) {
  std::sort(spans.begin(), spans.end());
  std::vector<TimeSpan> out;
  for (const auto& s : spans) {
    if (!out.empty() && s.a <= out.back().b) {
      if (out.back().b < s.b) out.back().b = s.b;
    } else {
      out.push_back(s);
    }
  }
  return out;
}

inline std::vector<TimeSpan> intersect_spans(const std::vector<TimeSpan>& x,
                                             const std::vector<TimeSpan>& y) {
  std::vector<TimeSpan> out;
  for (const auto& s : x)
    for (const auto& t : y) {
      Rational a = std::max(s.a, t.a), b = std::min(s.b, t.b);
      if (a <= b) out.push_back({a, b});
    }
  return merge_spans(out);
}

// Times at which one car is at the corner position q (an integer in [0, n)).
inline std::vector<TimeSpan> corner_occupancy(const CarSchedule& car, int q) {
  std::vector<TimeSpan> out;
  Rational n = car.circumference;
  for (const auto& p : car.pieces) {
    if (p.vel == Rational(0)) {
      if (p.pos0.mod(n) == Rational(q)) out.push_back({p.t0, p.t1});
      continue;
    }
    Rational u0 = p.pos0, u1 = p.pos0 + p.vel * (p.t1 - p.t0);
    // solve pos0 + vel * dt = q + c * n for integer wrap counts c
    std::int64_t clo = ((u0 - Rational(q)) / n).floor();
    std::int64_t chi = ((u1 - Rational(q)) / n).floor();
    for (std::int64_t c = clo; c <= chi; ++c) {
      Rational target = Rational(q) + Rational(c) * n;
      if (target < u0 || u1 < target) continue;
      Rational t = p.t0 + (target - u0) / p.vel;
      out.push_back({t, t});
    }
  }
  return merge_spans(out);
}

// Occupancy of a corner by any car of its face.
inline std::vector<TimeSpan> corner_occupancy(const MultipleMotion& motion, Corner c) {
  std::vector<TimeSpan> out;
  for (const auto& car : motion.cars[c.face]) {
    auto spans = corner_occupancy(car, c.pos);
    out.insert(out.end(), spans.begin(), spans.end());
  }
  return merge_spans(out);
}

}  // namespace detail

// The standard motion: digons and the exterior face carry one car, large
// faces carry k cars spaced one relator period apart; T = 4m + 2, L = kT.
inline MultipleMotion standard_motion(const HowieDiagram& d) {
  const int k = d.presentation().k;
  const int m = d.presentation().m;
  if (d.exterior_faces().size() > 1)
    throw Error("IllegalDiagram", "more than one exterior face");
  auto kinds = classify_faces(d);
  MultipleMotion motion;
  motion.period = Rational(4 * m + 2);
  motion.length = Rational(k) * motion.period;

  for (int f = 0; f < d.map().face_count(); ++f) {
    int n = d.map().degree(f);
    // per-period pattern: (duration, velocity) with total time T,
    // anchored at a known corner at time zero
    std::vector<std::pair<Rational, Rational>> pattern;
    Rational anchor;
    int cars = 1;
    switch (kinds[f].kind) {
      case FaceKind::Digon: {
        // unit speed, at the (+-) corner at even times
        int pm = corner_type(d, {f, 0}) == CornerType::PM ? 0 : 1;
        anchor = Rational(pm);
        for (int j = 0; j < 4 * m + 2; ++j) pattern.push_back({Rational(1), Rational(1)});
        break;
      }
      case FaceKind::LargePos: {
        // leaves the c-corner at 4m+1; at b_i when t = 2i, at a_i when
        // t = 2i + 1; for m = 0, speed 2 along the two forward edges
        cars = k;
        anchor = Rational((kinds[f].offset + 1) % n);
        if (m == 0) {
          pattern = {{Rational(1), Rational(1)},
                     {Rational(1, 2), Rational(2)},
                     {Rational(1, 2), Rational(2)}};
        } else {
          for (int j = 0; j < 2 * m + 2; ++j) pattern.push_back({Rational(1), Rational(1)});
          pattern.push_back({Rational(2 * m - 1), Rational(0)});
          pattern.push_back({Rational(1), Rational(1)});
        }
        break;
      }
      case FaceKind::LargeNeg: {
        // stops at the c^{-1}-corner during [1, 2m]; mirrored m = 0 speeds
        cars = k;
        anchor = Rational((kinds[f].offset + n - 1) % n);
        if (m == 0) {
          pattern = {{Rational(1, 2), Rational(2)},
                     {Rational(1, 2), Rational(2)},
                     {Rational(1), Rational(1)}};
        } else {
          pattern.push_back({Rational(1), Rational(1)});
          pattern.push_back({Rational(2 * m - 1), Rational(0)});
          for (int j = 0; j < 2 * m + 2; ++j) pattern.push_back({Rational(1), Rational(1)});
        }
        break;
      }
      case FaceKind::Exterior: {
        // all edges but the last in [0, 1/4], the last edge afterwards
        anchor = Rational(0);
        if (n == 1) {
          pattern = {{motion.period, Rational(1) / motion.period}};
        } else {
          pattern = {{Rational(1, 4), Rational(4 * (n - 1))},
                     {motion.period - Rational(1, 4),
                      Rational(1) / (motion.period - Rational(1, 4))}};
        }
        break;
      }
      default:
        throw Error("IllegalDiagram", "face " + std::to_string(f) + " is not classifiable");
    }

    Rational disp;
    for (const auto& [dur, vel] : pattern) disp += dur * vel;
    std::vector<CarSchedule> schedules;
    for (int j = 0; j < cars; ++j) {
      CarSchedule car;
      car.face = f;
      car.circumference = Rational(n);
      Rational t, pos = anchor + Rational(j) * disp;
      for (int b = 0; b < k; ++b) {
        for (const auto& [dur, vel] : pattern) {
          car.pieces.push_back({t, t + dur, pos.mod(car.circumference), vel});
          pos = pos.mod(car.circumference) + vel * dur;
          t += dur;
        }
      }
      schedules.push_back(std::move(car));
    }
    motion.cars.push_back(std::move(schedules));
  }
  return motion;
}

struct MotionVerdict {
  std::vector<std::string> findings;
  bool ok() const { return findings.empty(); }
};

// The four multiple-motion conditions; stop corners are the (++) and (--)
// corners of the diagram.
inline MotionVerdict validate_motion(const MultipleMotion& motion, const HowieDiagram& d) {
  MotionVerdict v;
  if (static_cast<int>(motion.cars.size()) != d.map().face_count()) {
    v.findings.push_back("Shape: need one car list per face");
    return v;
  }

  auto is_stop_corner = [&](Corner c) {
    CornerType t = corner_type(d, c);
    return t == CornerType::PP || t == CornerType::MM;
  };

  // condition 1 and schedule well-formedness
  for (int f = 0; f < d.map().face_count(); ++f) {
    if (motion.cars[f].empty()) {
      v.findings.push_back("Condition1: face " + std::to_string(f) + " has no car");
      continue;
    }
    Rational n(d.map().degree(f));
    for (std::size_t j = 0; j < motion.cars[f].size(); ++j) {
      const CarSchedule& car = motion.cars[f][j];
      std::string who = "face " + std::to_string(f) + " car " + std::to_string(j);
      if (car.pieces.empty() || car.pieces.front().t0 != Rational(0) ||
          car.pieces.back().t1 != motion.length) {
        v.findings.push_back("Schedule: " + who + " does not cover the time circle");
        continue;
      }
      Rational end_pos = car.pieces.back().pos0 +
                         car.pieces.back().vel * (car.pieces.back().t1 - car.pieces.back().t0);
      if ((end_pos - car.pieces.front().pos0).mod(n) != Rational(0))
        v.findings.push_back("Schedule: " + who + " is not periodic in position");
      for (std::size_t i = 0; i < car.pieces.size(); ++i) {
        const MotionPiece& p = car.pieces[i];
        if (p.vel < Rational(0))
          v.findings.push_back("Nondecrease: " + who + " has a decreasing piece at t = " +
                               p.t0.str());
        if (i + 1 < car.pieces.size()) {
          const MotionPiece& q = car.pieces[i + 1];
          if (p.t1 != q.t0)
            v.findings.push_back("Schedule: " + who + " has a time gap at t = " + p.t1.str());
          if ((p.pos0 + p.vel * (p.t1 - p.t0) - q.pos0).mod(n) != Rational(0))
            v.findings.push_back("Schedule: " + who + " jumps at t = " + p.t1.str());
        }
        if (p.vel == Rational(0) && p.t0 < p.t1) {
          Rational pos = p.pos0.mod(n);
          bool at_stop = pos.is_integer() &&
                         is_stop_corner({f, static_cast<int>(pos.floor())});
          if (!at_stop)
            v.findings.push_back("StopCorner: " + who + " stops away from a stop corner at t = " +
                                 p.t0.str());
        }
      }
    }
  }
  if (!v.findings.empty()) return v;

  // condition 2: separated stops at every vertex carrying stop corners
  for (int vx = 0; vx < static_cast<int>(d.vertices().size()); ++vx) {
    std::vector<Corner> stops;
    for (const Corner& c : d.vertices()[vx])
      if (is_stop_corner(c)) stops.push_back(c);
    if (stops.empty()) continue;
    if (stops.size() == 1) {
      if (!detail::corner_occupancy(motion, stops[0]).empty())
        v.findings.push_back("SeparatedStops: vertex " + std::to_string(vx) +
                             " has a single stop corner");
      continue;
    }
    for (std::size_t i = 0; i < stops.size(); ++i) {
      auto a = detail::corner_occupancy(motion, stops[i]);
      auto b = detail::corner_occupancy(motion, stops[(i + 1) % stops.size()]);
      if (!detail::intersect_spans(a, b).empty())
        v.findings.push_back("SeparatedStops: vertex " + std::to_string(vx) +
                             " has simultaneous cars at adjacent stop corners");
    }
  }

  // condition 3: car j at t + T equals car j+1 at t, checked at breakpoints
  // and midpoints of the merged piecewise-linear subdivision
  for (int f = 0; f < d.map().face_count(); ++f) {
    const auto& cars = motion.cars[f];
    for (std::size_t j = 0; j < cars.size(); ++j) {
      const CarSchedule& a = cars[j];
      const CarSchedule& b = cars[(j + 1) % cars.size()];
      std::set<Rational> times;
      for (const auto& p : b.pieces) times.insert(p.t0);
      for (const auto& p : a.pieces) times.insert((p.t0 - motion.period).mod(motion.length));
      std::vector<Rational> ts(times.begin(), times.end());
      bool bad = false;
      for (std::size_t i = 0; i < ts.size() && !bad; ++i) {
        Rational lo = ts[i];
        Rational hi = i + 1 < ts.size() ? ts[i + 1] : ts[0] + motion.length;
        for (Rational t : {lo, (lo + hi) * Rational(1, 2)}) {
          Rational n(d.map().degree(f));
          if ((a.position_at(t + motion.period, motion.length) -
               b.position_at(t, motion.length))
                  .mod(n) != Rational(0))
            bad = true;
        }
      }
      if (bad)
        v.findings.push_back("Condition3: face " + std::to_string(f) + " cars " +
                             std::to_string(j) + "," +
                             std::to_string((j + 1) % cars.size()) + " are not T-shifts");
    }
  }

  // condition 4: over [0, T] each car sweeps one arc of a partition
  for (int f = 0; f < d.map().face_count(); ++f) {
    const auto& cars = motion.cars[f];
    int dcount = static_cast<int>(cars.size());
    if (dcount == 1) continue;  // single arc: the whole boundary
    Rational n(d.map().degree(f));
    Rational disp;
    for (const auto& p : cars[0].pieces) {
      if (p.t1 <= motion.period) disp += p.vel * (p.t1 - p.t0);
    }
    if (disp * Rational(dcount) != n) {
      v.findings.push_back("Condition4: face " + std::to_string(f) +
                           " arcs do not partition the boundary");
      continue;
    }
    for (int j = 0; j < dcount; ++j) {
      Rational sj = cars[j].position_at(Rational(0), motion.length);
      Rational sn = cars[(j + 1) % dcount].position_at(Rational(0), motion.length);
      if ((sj + disp - sn).mod(n) != Rational(0))
        v.findings.push_back("Condition4: face " + std::to_string(f) +
                             " arc endpoints do not chain");
    }
  }
  return v;
}

struct CollisionReport {
  std::vector<int> cc_vertices;
  std::vector<std::vector<TimeSpan>> vertex_times;   // per vertex, may be empty
  std::map<int, std::vector<Rational>> edge_points;  // keyed by min dart of the edge
  std::vector<int> kprime_face;                      // 1 - d_D
  long long d_constant = 0;                          // k(2m + 1)

  long long kprime_edge_total() const {
    long long s = 0;
    for (const auto& [e, pts] : edge_points) s += static_cast<long long>(pts.size());
    return s;
  }
};

namespace detail {

// Collision positions on the edge {dart, theta(dart)}: car a at x along the
// dart and car b at 1 - x along its partner, 0 < x < 1.
inline void edge_collisions(const CarSchedule& a, int pa, const CarSchedule& b, int pb,
                            std::set<Rational>& out) {
  Rational na = a.circumference, nb = b.circumference;
  for (const auto& P : a.pieces) {
    Rational ua0 = P.pos0, ua1 = P.pos0 + P.vel * (P.t1 - P.t0);
    std::int64_t clo = ((ua0 - Rational(pa + 1)) / na).floor();
    std::int64_t chi = ((ua1 - Rational(pa)) / na).floor();
    for (std::int64_t c = clo; c <= chi; ++c) {
      // time window during which car a is on the dart (wrap c)
      Rational lo = Rational(pa) + Rational(c) * na, hi = lo + Rational(1);
      Rational s0 = P.t0, s1 = P.t1;
      if (P.vel > Rational(0)) {
        s0 = std::max(s0, P.t0 + (lo - ua0) / P.vel);
        s1 = std::min(s1, P.t0 + (hi - ua0) / P.vel);
      } else if (ua0 < lo || hi < ua0) {
        continue;
      }
      if (s1 < s0) continue;
      for (const auto& Q : b.pieces) {
        Rational ub0 = Q.pos0, ub1 = Q.pos0 + Q.vel * (Q.t1 - Q.t0);
        std::int64_t dlo = ((ub0 - Rational(pb + 1)) / nb).floor();
        std::int64_t dhi = ((ub1 - Rational(pb)) / nb).floor();
        for (std::int64_t e = dlo; e <= dhi; ++e) {
          Rational blo = Rational(pb) + Rational(e) * nb, bhi = blo + Rational(1);
          Rational r0 = Q.t0, r1 = Q.t1;
          if (Q.vel > Rational(0)) {
            r0 = std::max(r0, Q.t0 + (blo - ub0) / Q.vel);
            r1 = std::min(r1, Q.t0 + (bhi - ub0) / Q.vel);
          } else if (ub0 < blo || bhi < ub0) {
            continue;
          }
          Rational t0 = std::max(s0, r0), t1 = std::min(s1, r1);
          if (t1 < t0) continue;
          // x(t) + x'(t) = 1 with x = ua(t) - lo, x' = ub(t) - blo
          auto xa = [&](Rational t) { return ua0 + P.vel * (t - P.t0) - lo; };
          auto xb = [&](Rational t) { return ub0 + Q.vel * (t - Q.t0) - blo; };
          Rational slope = P.vel + Q.vel;
          Rational f0 = xa(t0) + xb(t0) - Rational(1);
          if (slope == Rational(0)) {
            if (f0 == Rational(0)) {
              Rational x = xa(t0);
              if (Rational(0) < x && x < Rational(1)) out.insert(x);
            }
            continue;
          }
          Rational t = t0 - f0 / slope;
          if (t < t0 || t1 < t) continue;
          Rational x = xa(t);
          if (Rational(0) < x && x < Rational(1)) out.insert(x);
        }
      }
    }
  }
}

}  // namespace detail

// Exact collision enumeration over one time circle: edge collisions from
// pairwise linear pieces, vertex complete collisions as the intersection of
// the occupancy sets of all corners at the vertex.
inline CollisionReport detect_collisions(const HowieDiagram& d, const MultipleMotion& motion) {
  CollisionReport rep;
  rep.d_constant = static_cast<long long>(d.presentation().k) * (2 * d.presentation().m + 1);
  for (int f = 0; f < d.map().face_count(); ++f)
    rep.kprime_face.push_back(1 - static_cast<int>(motion.cars[f].size()));

  for (int dart = 0; dart < d.map().dart_count(); ++dart) {
    int other = d.map().theta(dart);
    if (other < dart) continue;
    int fa = d.map().face_of(dart), fb = d.map().face_of(other);
    int pa = d.map().pos_of(dart), pb = d.map().pos_of(other);
    std::set<Rational> xs;
    for (std::size_t i = 0; i < motion.cars[fa].size(); ++i)
      for (std::size_t j = 0; j < motion.cars[fb].size(); ++j) {
        if (fa == fb && i == j) continue;  // one car has a single position
        detail::edge_collisions(motion.cars[fa][i], pa, motion.cars[fb][j], pb, xs);
      }
    rep.edge_points[dart] = std::vector<Rational>(xs.begin(), xs.end());
  }

  for (int v = 0; v < static_cast<int>(d.vertices().size()); ++v) {
    std::vector<TimeSpan> common = {{Rational(0), motion.length}};
    for (const Corner& c : d.vertices()[v])
      common = detail::intersect_spans(common, detail::corner_occupancy(motion, c));
    rep.vertex_times.push_back(common);
    if (!common.empty()) rep.cc_vertices.push_back(v);
  }
  return rep;
}

// Car-crash inequality: |ccVertices| + sum K'(e) + sum K'(D) >= chi(S),
// since K'(v) <= 1 with equality exactly at complete collisions.
struct CarCrashVerdict {
  long long lhs = 0;
  int rhs = 0;
  bool holds() const { return lhs >= rhs; }
};

inline CarCrashVerdict car_crash_audit(const HowieDiagram& d, const CollisionReport& rep) {
  CarCrashVerdict v;
  v.rhs = d.map().euler_characteristic();
  v.lhs = static_cast<long long>(rep.cc_vertices.size()) + rep.kprime_edge_total();
  for (int kp : rep.kprime_face) v.lhs += kp;
  return v;
}

namespace detail {

inline bool vertex_interior(const HowieDiagram& d, int v) {
  if (d.vertex_exterior(v)) return false;
  for (const Corner& c : d.vertices()[v])
    if (d.face_exterior(c.face)) return false;
  return true;
}

inline bool edge_on_exterior(const HowieDiagram& d, int dart) {
  return d.face_exterior(d.map().face_of(dart)) ||
         d.face_exterior(d.map().face_of(d.map().theta(dart)));
}

}  // namespace detail

// Three exact checks behind the standard-motion lemma: interior complete
// collisions only at sources/sinks at integer instants; the parity direction
// invariant, piece by piece; boundary edges carry at most k(2m+1) points.
inline std::vector<std::string> lemma5_audit(const HowieDiagram& d, const MultipleMotion& motion,
                                             const CollisionReport& rep) {
  std::vector<std::string> findings;

  for (int v : rep.cc_vertices) {
    if (!detail::vertex_interior(d, v)) continue;
    bool all_pm = true, all_mp = true;
    for (const Corner& c : d.vertices()[v]) {
      CornerType t = corner_type(d, c);
      if (t != CornerType::PM) all_pm = false;
      if (t != CornerType::MP) all_mp = false;
    }
    if (!all_pm && !all_mp)
      findings.push_back("InteriorCollision: vertex " + std::to_string(v) +
                         " is neither a source nor a sink");
    for (const TimeSpan& s : rep.vertex_times[v])
      if (s.a != s.b || !s.a.is_integer())
        findings.push_back("InteriorCollision: vertex " + std::to_string(v) +
                           " collides at non-integer time " + s.a.str());
  }

  // direction invariant: interior cars on edges move along the edge arrow
  // exactly when the integer part of the time is odd
  for (int f = 0; f < d.map().face_count(); ++f) {
    if (d.face_exterior(f)) continue;
    Rational n(d.map().degree(f));
    for (const auto& car : motion.cars[f]) {
      for (const auto& p : car.pieces) {
        if (p.vel == Rational(0)) continue;
        Rational u0 = p.pos0, u1 = p.pos0 + p.vel * (p.t1 - p.t0);
        std::int64_t q0 = u0.floor(), q1 = (u1.is_integer() ? u1.floor() - 1 : u1.floor());
        for (std::int64_t q = q0; q <= q1; ++q) {
          Rational lo = std::max(u0, Rational(q)), hi = std::min(u1, Rational(q + 1));
          if (hi <= lo) continue;
          Rational ta = p.t0 + (lo - u0) / p.vel, tb = p.t0 + (hi - u0) / p.vel;
          int pos = static_cast<int>(Rational(q).mod(n).floor());
          int dart = d.map().face(f)[pos];
          std::int64_t fa = ta.floor();
          std::int64_t fb = tb.is_integer() ? tb.floor() - 1 : tb.floor();
          bool along = d.sign(dart) == 1;
          if (fa != fb || (std::llabs(fa) % 2 == 1) != along)
            findings.push_back("DirectionInvariant: face " + std::to_string(f) + " dart " +
                               std::to_string(dart) + " traversed during [" + ta.str() + ", " +
                               tb.str() + "]");
        }
      }
    }
  }

  for (const auto& [dart, pts] : rep.edge_points) {
    if (!detail::edge_on_exterior(d, dart)) continue;
    if (static_cast<long long>(pts.size()) > rep.d_constant)
      findings.push_back("BoundaryEdgeBound: edge " + std::to_string(dart) + " has " +
                         std::to_string(pts.size()) + " > " + std::to_string(rep.d_constant) +
                         " collision points");
  }
  return findings;
}

// Combined curvature K + K' and the final isoperimetric inequality
// (D + 3) * perimeter - (large faces) + 2 >= 6 with D = k(2m + 1).
struct Section8Report {
  std::vector<std::string> findings;
  std::vector<std::string> warnings;
  CollisionReport collisions;
  bool inequality_applicable = false;
  long long lhs = 0;
  long long rhs = 6;
  bool inequality_holds() const { return lhs >= rhs; }
  bool ok() const { return findings.empty() && (!inequality_applicable || inequality_holds()); }
};

inline Section8Report combined_audit(const HowieDiagram& d) {
  const int k = d.presentation().k;
  const int m = d.presentation().m;
  if (k < 2) throw Error("WrongShape", "k = " + std::to_string(k) + " < 2");
  if (d.exterior_faces().size() + d.exterior_vertices().size() != 1)
    throw Error("WrongShape", "need exactly one exterior face or vertex");

  Section8Report rep;
  WeightAssignment nu = section5_weights(d);
  auto gb = gauss_bonnet_report(d.map(), nu);
  auto kinds = classify_faces(d);
  MultipleMotion motion = standard_motion(d);
  MotionVerdict mv = validate_motion(motion, d);
  rep.findings.insert(rep.findings.end(), mv.findings.begin(), mv.findings.end());
  rep.collisions = detect_collisions(d, motion);

  bool involutions = d.presentation().base.has_involution();
  std::set<int> cc(rep.collisions.cc_vertices.begin(), rep.collisions.cc_vertices.end());
  for (int v = 0; v < static_cast<int>(d.vertices().size()); ++v) {
    if (!detail::vertex_interior(d, v)) continue;
    VertexCensus c = vertex_census(d, nu, v);
    if (c.k > Rational(0)) {
      rep.findings.push_back("PositiveInteriorVertex: vertex " + std::to_string(v) + " K = " +
                             c.k.str());
      continue;
    }
    if (c.k != Rational(0) || !cc.count(v)) continue;
    std::string kase = c.p > 0                  ? "a"
                       : c.n == 0 && c.l == 2   ? "b"
                       : c.n == 1 && c.l == 3   ? "c"
                       : c.n == 2 && c.l == 4   ? "d"
                                                : "?";
    std::string msg = "vertex " + std::to_string(v) + " (case " + kase +
                      ") hosts a complete collision";
    if (involutions && k == 2)
      rep.warnings.push_back(
          "InvolutionHypothesisGap: " + msg +
          "; excluded only under the involution-free hypothesis, which fails here");
    else
      rep.findings.push_back("CollisionAtFlatVertex: " + msg);
  }

  int large = 0;
  for (int f = 0; f < d.map().face_count(); ++f) {
    Rational ks = gb.face_k[f] + Rational(rep.collisions.kprime_face[f]);
    if (kinds[f].kind == FaceKind::LargePos || kinds[f].kind == FaceKind::LargeNeg) {
      ++large;
      if (ks > Rational(-1))
        rep.findings.push_back("CombinedCurvature: large face " + std::to_string(f) + " has " +
                               ks.str() + " > -1");
    } else if (kinds[f].kind == FaceKind::Digon && ks != Rational(0)) {
      rep.findings.push_back("CombinedCurvature: digon " + std::to_string(f) + " has " + ks.str());
    }
  }
  for (const auto& [dart, pts] : rep.collisions.edge_points) {
    if (detail::edge_on_exterior(d, dart)) continue;
    if (!pts.empty())
      rep.findings.push_back("InteriorEdgeCollision: edge " + std::to_string(dart) + " has " +
                             std::to_string(pts.size()) + " collision points");
  }

  if (d.exterior_faces().size() == 1) {
    rep.inequality_applicable = true;
    long long D = static_cast<long long>(k) * (2 * m + 1);
    long long perimeter = d.map().degree(d.exterior_faces()[0]);
    rep.lhs = (D + 3) * perimeter - large + 2;
    if (!rep.inequality_holds())
      rep.findings.push_back("IsoperimetricInequality: " + std::to_string(rep.lhs) + " < " +
                             std::to_string(rep.rhs));
  }
  return rep;
}

}  // namespace relpres
