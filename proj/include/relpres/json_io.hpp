#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "relpres/curvature.hpp"
#include "relpres/diagram.hpp"
#include "relpres/motion.hpp"
#include "relpres/rewrite.hpp"

namespace relpres {

using nlohmann::json;

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("ParseError", "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw Error("ParseError", path + ": " + e.what());
  }
  return j;
}

inline Group group_from_json(const json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("table"))
    throw Error("ParseError", "group needs \"order\" and \"table\"");
  int order = j.at("order").get<int>();
  std::vector<std::vector<int>> table = j.at("table").get<std::vector<std::vector<int>>>();
  if (static_cast<int>(table.size()) != order)
    throw Error("ParseError", "group table size differs from order");
  return Group::from_table(table);
}

inline json group_to_json(const Group& g) {
  std::vector<std::vector<int>> table;
  for (int a = 0; a < g.order(); ++a) {
    std::vector<int> row;
    for (int b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
    table.push_back(std::move(row));
  }
  return json{{"order", g.order()}, {"table", table}};
}

// Word over G * <t>: [{"g": idx} | {"t": 1} | {"t": -1}, ...]
inline TWord word_from_json(const json& j) {
  if (!j.is_object() || !j.contains("letters"))
    throw Error("ParseError", "word needs \"letters\"");
  TWord w;
  for (const json& l : j.at("letters")) {
    if (l.contains("g"))
      w.letters.push_back(TLetter::coeff(l.at("g").get<int>()));
    else if (l.contains("t"))
      w.letters.push_back(TLetter::tpow(l.at("t").get<int>()));
    else
      throw Error("ParseError", "letter needs \"g\" or \"t\"");
  }
  return w;
}

inline FPWord fpword_from_json(const json& j) {
  FPWord w;
  for (const json& s : j) w.syl.push_back({s.at("copy").get<int>(), s.at("g").get<int>()});
  return w;
}

inline json fpword_to_json(const FPWord& w) {
  json out = json::array();
  for (const Syllable& s : w.syl) out.push_back({{"copy", s.copy}, {"g", s.g}});
  return out;
}

// "group" may be an embedded group object or a path string.
inline PhiPresentation presentation_from_json(const json& j) {
  PhiPresentation p;
  p.s = j.at("s").get<int>();
  p.m = j.at("m").get<int>();
  p.k = j.at("k").get<int>();
  const json& g = j.at("group");
  p.base = g.is_string() ? group_from_json(load_json_file(g.get<std::string>()))
                         : group_from_json(g);
  p.c = fpword_from_json(j.at("c"));
  for (const json& w : j.at("a")) p.a.push_back(fpword_from_json(w));
  for (const json& w : j.at("b")) p.b.push_back(fpword_from_json(w));
  if (static_cast<int>(p.a.size()) != p.m + 1 || p.b.size() != p.a.size())
    throw Error("ParseError", "presentation needs m+1 words in \"a\" and \"b\"");
  return p;
}

inline json presentation_to_json(const PhiPresentation& p) {
  json a = json::array(), b = json::array();
  for (const FPWord& w : p.a) a.push_back(fpword_to_json(w));
  for (const FPWord& w : p.b) b.push_back(fpword_to_json(w));
  return json{{"s", p.s},           {"m", p.m},           {"k", p.k}, {"c", fpword_to_json(p.c)},
              {"a", std::move(a)},  {"b", std::move(b)},  {"group", group_to_json(p.base)}};
}

inline SurfaceMap map_from_json(const json& j) {
  return SurfaceMap::build(j.at("darts").get<int>(), j.at("theta").get<std::vector<int>>(),
                           j.at("faces").get<std::vector<std::vector<int>>>());
}

// Diagram file: map fields plus edgeForward, cornerLabels (per face, per
// corner), exteriorFaces, exteriorVertices; the presentation may be embedded
// under "presentation" or supplied separately.
inline HowieDiagram diagram_from_json(const json& j, const PhiPresentation& pres) {
  SurfaceMap m = map_from_json(j);
  std::vector<std::vector<FPWord>> labels;
  for (const json& face : j.at("cornerLabels")) {
    std::vector<FPWord> row;
    for (const json& w : face) row.push_back(fpword_from_json(w));
    labels.push_back(std::move(row));
  }
  return HowieDiagram::build(std::move(m), j.at("edgeForward").get<std::vector<int>>(),
                             std::move(labels), j.at("exteriorFaces").get<std::vector<int>>(),
                             j.at("exteriorVertices").get<std::vector<int>>(), pres);
}

inline json diagram_to_json(const HowieDiagram& d) {
  const SurfaceMap& m = d.map();
  std::vector<int> theta, forward;
  for (int i = 0; i < m.dart_count(); ++i) {
    theta.push_back(m.theta(i));
    if (d.sign(i) == 1) forward.push_back(i);
  }
  json labels = json::array();
  for (int f = 0; f < m.face_count(); ++f) {
    json row = json::array();
    for (int pos = 0; pos < m.degree(f); ++pos) row.push_back(fpword_to_json(d.corner_label({f, pos})));
    labels.push_back(std::move(row));
  }
  return json{{"darts", m.dart_count()},
              {"theta", theta},
              {"faces", m.faces()},
              {"edgeForward", forward},
              {"cornerLabels", std::move(labels)},
              {"exteriorFaces", d.exterior_faces()},
              {"exteriorVertices", d.exterior_vertices()},
              {"presentation", presentation_to_json(d.presentation())}};
}

inline json rational_to_json(const Rational& r) { return r.str(); }

inline json motion_to_json(const MultipleMotion& mo) {
  json faces = json::array();
  for (const auto& cars : mo.cars) {
    json fs = json::array();
    for (const CarSchedule& car : cars) {
      json pieces = json::array();
      for (const MotionPiece& p : car.pieces)
        pieces.push_back({{"t0", p.t0.str()},
                          {"t1", p.t1.str()},
                          {"pos0", p.pos0.str()},
                          {"vel", p.vel.str()}});
      fs.push_back(std::move(pieces));
    }
    faces.push_back(std::move(fs));
  }
  return json{{"period", mo.period.str()}, {"length", mo.length.str()}, {"cars", std::move(faces)}};
}

inline json collision_report_to_json(const CollisionReport& rep) {
  json edges = json::object();
  for (const auto& [dart, pts] : rep.edge_points) {
    json xs = json::array();
    for (const Rational& x : pts) xs.push_back(x.str());
    edges[std::to_string(dart)] = std::move(xs);
  }
  json times = json::array();
  for (const auto& spans : rep.vertex_times) {
    json vs = json::array();
    for (const TimeSpan& s : spans) vs.push_back({{"from", s.a.str()}, {"to", s.b.str()}});
    times.push_back(std::move(vs));
  }
  return json{{"ccVertices", rep.cc_vertices},
              {"vertexTimes", std::move(times)},
              {"edgePoints", std::move(edges)},
              {"kprimeFace", rep.kprime_face},
              {"dConstant", rep.d_constant}};
}

inline json curvature_report_to_json(const CurvatureReport& rep) {
  json vk = json::array(), fk = json::array();
  for (const Rational& r : rep.vertex_k) vk.push_back(r.str());
  for (const Rational& r : rep.face_k) fk.push_back(r.str());
  return json{{"vertexK", std::move(vk)},
              {"faceK", std::move(fk)},
              {"total", rep.total.str()},
              {"chi", rep.chi},
              {"matches", rep.matches()}};
}

inline json condition_report_to_json(const ConditionReport& rep) {
  return json{{"condition1", rep.cond1},
              {"condition2", rep.cond2},
              {"condition3", rep.cond3},
              {"condition4", rep.cond4},
              {"all", rep.all()},
              {"notes", rep.notes}};
}

}  // namespace relpres
