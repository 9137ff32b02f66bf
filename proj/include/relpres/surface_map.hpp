#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "relpres/error.hpp"

namespace relpres {

// Corner i of a face is the gap between the darts face[i-1] (incoming) and
// face[i] (outgoing) of the anticlockwise boundary cycle.
struct Corner {
  int face = 0;
  int pos = 0;
  friend auto operator<=>(const Corner&, const Corner&) = default;
};

// A combinatorial map on a closed oriented surface: darts 0..dartCount-1,
// a fixed-point-free involution theta pairing darts into edges, and faces
// as a partition of the darts into anticlockwise boundary cycles.
class SurfaceMap {
 public:
  static SurfaceMap build(int dart_count, std::vector<int> theta,
                          std::vector<std::vector<int>> faces) {
    if (static_cast<int>(theta.size()) != dart_count)
      throw Error("ThetaNotInvolution", "theta size differs from dart count");
    for (int d = 0; d < dart_count; ++d) {
      if (theta[d] < 0 || theta[d] >= dart_count || theta[theta[d]] != d)
        throw Error("ThetaNotInvolution", "dart " + std::to_string(d));
      if (theta[d] == d) throw Error("ThetaHasFixedPoint", "dart " + std::to_string(d));
    }
    std::vector<int> seen(dart_count, 0);
    for (const auto& f : faces) {
      if (f.empty()) throw Error("FacesNotPartition", "empty face");
      for (int d : f) {
        if (d < 0 || d >= dart_count || seen[d]++)
          throw Error("FacesNotPartition", "dart " + std::to_string(d));
      }
    }
    for (int d = 0; d < dart_count; ++d)
      if (!seen[d]) throw Error("FacesNotPartition", "dart " + std::to_string(d) + " unused");
    SurfaceMap m;
    m.theta_ = std::move(theta);
    m.faces_ = std::move(faces);
    m.face_of_.assign(dart_count, 0);
    m.pos_of_.assign(dart_count, 0);
    for (int f = 0; f < static_cast<int>(m.faces_.size()); ++f)
      for (int i = 0; i < static_cast<int>(m.faces_[f].size()); ++i) {
        m.face_of_[m.faces_[f][i]] = f;
        m.pos_of_[m.faces_[f][i]] = i;
      }
    return m;
  }

  int dart_count() const { return static_cast<int>(theta_.size()); }
  int theta(int d) const { return theta_[d]; }
  int face_count() const { return static_cast<int>(faces_.size()); }
  const std::vector<int>& face(int f) const { return faces_[f]; }
  const std::vector<std::vector<int>>& faces() const { return faces_; }
  int face_of(int d) const { return face_of_[d]; }
  int pos_of(int d) const { return pos_of_[d]; }
  int degree(int f) const { return static_cast<int>(faces_[f].size()); }
  int edge_count() const { return dart_count() / 2; }

  int incoming_dart(Corner c) const {
    const auto& f = faces_[c.face];
    return f[(c.pos + f.size() - 1) % f.size()];
  }
  int outgoing_dart(Corner c) const { return faces_[c.face][c.pos]; }

  // Vertex rotation: the corner after the theta-partner of the outgoing dart.
  Corner rho(Corner c) const {
    int d = theta_[outgoing_dart(c)];
    return {face_of_[d], (pos_of_[d] + 1) % degree(face_of_[d])};
  }

  std::vector<Corner> corners() const {
    std::vector<Corner> out;
    for (int f = 0; f < face_count(); ++f)
      for (int i = 0; i < degree(f); ++i) out.push_back({f, i});
    return out;
  }

  // Corner orbits of rho; each orbit is one vertex, listed in rotation order.
  std::vector<std::vector<Corner>> vertices() const {
    std::vector<std::vector<Corner>> out;
    std::vector<std::vector<char>> used(face_count());
    for (int f = 0; f < face_count(); ++f) used[f].assign(degree(f), 0);
    for (Corner start : corners()) {
      if (used[start.face][start.pos]) continue;
      std::vector<Corner> orbit;
      Corner c = start;
      do {
        used[c.face][c.pos] = 1;
        orbit.push_back(c);
        c = rho(c);
      } while (!(c == start));
      out.push_back(std::move(orbit));
    }
    return out;
  }

  int euler_characteristic() const {
    return static_cast<int>(vertices().size()) - edge_count() + face_count();
  }

 private:
  SurfaceMap() = default;
  std::vector<int> theta_;
  std::vector<std::vector<int>> faces_;
  std::vector<int> face_of_;
  std::vector<int> pos_of_;
};

// True when the union of face cycles and theta links every dart to dart 0,
// i.e. the map lives on a single connected surface.
inline bool map_connected(const SurfaceMap& m) {
  int n = m.dart_count();
  std::vector<char> seen(n, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int reached = 0;
  while (!stack.empty()) {
    int d = stack.back();
    stack.pop_back();
    ++reached;
    int f = m.face_of(d);
    int nxt = m.face(f)[(m.pos_of(d) + 1) % m.degree(f)];
    for (int e : {m.theta(d), nxt}) {
      if (!seen[e]) {
        seen[e] = 1;
        stack.push_back(e);
      }
    }
  }
  return reached == n;
}

// Random map with the given face degrees: darts assigned consecutively,
// edges by a uniformly random fixed-point-free pairing; any genus. Pairings
// splitting the faces across several surfaces are resampled away.
inline SurfaceMap random_map(const std::vector<int>& degrees, std::uint64_t seed) {
  int total = std::accumulate(degrees.begin(), degrees.end(), 0);
  if (total % 2 != 0) throw Error("OddDartTotal", "face degrees sum to an odd number");
  std::vector<std::vector<int>> faces;
  int next = 0;
  for (int d : degrees) {
    std::vector<int> f(d);
    std::iota(f.begin(), f.end(), next);
    next += d;
    faces.push_back(std::move(f));
  }
  std::vector<int> order(total);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  for (;;) {
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<int> theta(total);
    for (int i = 0; i < total; i += 2) {
      theta[order[i]] = order[i + 1];
      theta[order[i + 1]] = order[i];
    }
    SurfaceMap m = SurfaceMap::build(total, std::move(theta), faces);
    if (map_connected(m)) return m;
  }
}

}  // namespace relpres
