#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "relpres/motion.hpp"

using namespace relpres;

TEST_CASE("standard motion schedules") {
  SUBCASE("digon car: unit speed, (+-) corner at even times") {
    HowieDiagram d = fixtures::two_digon_sphere();
    MultipleMotion mo = standard_motion(d);
    CHECK(mo.period == Rational(2));
    CHECK(mo.length == Rational(4));
    REQUIRE(mo.cars[0].size() == 1);
    const CarSchedule& car = mo.cars[0][0];
    CHECK(car.position_at(Rational(0), mo.length) == Rational(0));  // (A,0) is (+-)
    CHECK(car.position_at(Rational(2), mo.length) == Rational(0));
    CHECK(car.position_at(Rational(1, 2), mo.length) == Rational(1, 2));
    CHECK(car.position_at(Rational(3), mo.length) == Rational(1));
  }

  SUBCASE("large face with m = 0: speed 2 along, speed 1 against") {
    HowieDiagram d = fixtures::z3_pillow(2);
    MultipleMotion mo = standard_motion(d);
    REQUIRE(mo.cars[0].size() == 2);  // k cars
    const CarSchedule& car = mo.cars[0][0];
    // at time zero at the (+-) corner after the c-corner
    Rational p0 = car.position_at(Rational(0), mo.length);
    CHECK(p0 == Rational(1));
    CHECK(corner_type(d, {0, 1}) == CornerType::PM);
    CHECK(car.position_at(Rational(1), mo.length) == Rational(2));       // against edge
    CHECK(car.position_at(Rational(3, 2), mo.length) == Rational(3));    // speed 2
    CHECK(car.position_at(Rational(2), mo.length) == Rational(4));
    // second car is the first one shifted by one period of the relator
    CHECK(mo.cars[0][1].position_at(Rational(0), mo.length) == Rational(4));
  }

  SUBCASE("large faces with m = 1 stop inside the prescribed windows") {
    HowieDiagram d = fixtures::z3_mirror_pillow_m1();
    MultipleMotion mo = standard_motion(d);
    CHECK(mo.period == Rational(6));
    CHECK(mo.length == Rational(12));
    const CarSchedule& pos_car = mo.cars[0][0];
    // stopped at the c-corner during [2m+2, 4m+1] = [4, 5]
    CHECK(pos_car.position_at(Rational(4), mo.length) == Rational(5));
    CHECK(pos_car.position_at(Rational(9, 2), mo.length) == Rational(5));
    CHECK(pos_car.position_at(Rational(5), mo.length) == Rational(5));
    CHECK(pos_car.position_at(Rational(6), mo.length) == Rational(6));
    // b_i at t = 2i, a_i at t = 2i + 1
    CHECK(pos_car.position_at(Rational(0), mo.length) == Rational(1));
    CHECK(pos_car.position_at(Rational(1), mo.length) == Rational(2));
    CHECK(pos_car.position_at(Rational(2), mo.length) == Rational(3));
    CHECK(pos_car.position_at(Rational(3), mo.length) == Rational(4));
    const CarSchedule& neg_car = mo.cars[1][0];
    // stopped at the c^{-1}-corner during [1, 2m] = [1, 2]
    CHECK(neg_car.position_at(Rational(1), mo.length) == Rational(0));
    CHECK(neg_car.position_at(Rational(3, 2), mo.length) == Rational(0));
    CHECK(neg_car.position_at(Rational(2), mo.length) == Rational(0));
  }

  SUBCASE("exterior car covers all but one edge in a quarter unit") {
    HowieDiagram d = fixtures::z3_pillow(2);
    MultipleMotion mo = standard_motion(d);
    const CarSchedule& car = mo.cars[1][0];
    CHECK(car.position_at(Rational(0), mo.length) == Rational(0));
    CHECK(car.position_at(Rational(1, 4), mo.length) == Rational(5));
    CHECK(car.position_at(Rational(2), mo.length) == Rational(0));
  }
}

TEST_CASE("validate_motion accepts the standard motion on the corpus") {
  for (const HowieDiagram& d :
       {fixtures::z3_pillow(2), fixtures::cyclic_pillow(3, 3), fixtures::z2_mirror_pillow(),
        fixtures::two_digon_sphere(), fixtures::digon_spliced_pillow(),
        fixtures::z3_mirror_pillow_m1()}) {
    MultipleMotion mo = standard_motion(d);
    MotionVerdict v = validate_motion(mo, d);
    CAPTURE(v.findings.empty() ? "" : v.findings[0]);
    CHECK(v.ok());
  }
}

TEST_CASE("validate_motion rejects corrupted motions") {
  SUBCASE("decreasing piece") {
    HowieDiagram d = fixtures::two_digon_sphere();
    MultipleMotion mo = standard_motion(d);
    mo.cars[0][0].pieces[1].vel = Rational(-1);
    MotionVerdict v = validate_motion(mo, d);
    bool found = false;
    for (const auto& f : v.findings)
      if (f.find("Nondecrease") != std::string::npos) found = true;
    CHECK(found);
  }

  SUBCASE("simultaneous stops at adjacent stop corners") {
    HowieDiagram d = fixtures::z3_mirror_pillow_m1();
    MultipleMotion mo = standard_motion(d);
    mo.cars[1] = mo.cars[0];  // mirror face reuses the forward schedule
    for (auto& car : mo.cars[1]) car.face = 1;
    MotionVerdict v = validate_motion(mo, d);
    bool found = false;
    for (const auto& f : v.findings)
      if (f.find("SeparatedStops") != std::string::npos) found = true;
    CHECK(found);
  }

  SUBCASE("broken T-shift between consecutive cars") {
    HowieDiagram d = fixtures::z3_pillow(2);
    MultipleMotion mo = standard_motion(d);
    mo.cars[0][1] = mo.cars[0][0];
    MotionVerdict v = validate_motion(mo, d);
    bool found = false;
    for (const auto& f : v.findings)
      if (f.find("Condition3") != std::string::npos) found = true;
    CHECK(found);
  }
}

TEST_CASE("condition-3 shift property at random rational times") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> num(0, 400), den(1, 17);
  for (const HowieDiagram& d : {fixtures::z3_pillow(2), fixtures::z3_mirror_pillow_m1(),
                                fixtures::digon_spliced_pillow()}) {
    MultipleMotion mo = standard_motion(d);
    for (int i = 0; i < 50; ++i) {
      Rational t(num(rng), den(rng));
      for (int f = 0; f < d.map().face_count(); ++f) {
        const auto& cars = mo.cars[f];
        Rational n(d.map().degree(f));
        for (std::size_t j = 0; j < cars.size(); ++j) {
          Rational lhs = cars[j].position_at(t + mo.period, mo.length);
          Rational rhs = cars[(j + 1) % cars.size()].position_at(t, mo.length);
          CHECK((lhs - rhs).mod(n) == Rational(0));
        }
      }
    }
  }
}

TEST_CASE("collisions on the two-digon sphere") {
  HowieDiagram d = fixtures::two_digon_sphere();
  MultipleMotion mo = standard_motion(d);
  CollisionReport rep = detect_collisions(d, mo);
  CHECK(rep.cc_vertices == std::vector<int>{0, 1});
  for (const auto& [e, pts] : rep.edge_points) CHECK(pts.empty());
  // vertex 0 collides at even instants, vertex 1 at odd ones
  for (const TimeSpan& s : rep.vertex_times[0]) {
    CHECK(s.a == s.b);
    CHECK(s.a.is_integer());
    CHECK(s.a.floor() % 2 == 0);
  }
  for (const TimeSpan& s : rep.vertex_times[1]) {
    CHECK(s.a == s.b);
    CHECK(s.a.floor() % 2 == 1);
  }
  CarCrashVerdict cc = car_crash_audit(d, rep);
  CHECK(cc.lhs == 2);  // two complete collisions, one car per face
  CHECK(cc.rhs == 2);
  CHECK(cc.holds());
}

TEST_CASE("collisions on the mirror pillow") {
  HowieDiagram d = fixtures::z2_mirror_pillow();
  MultipleMotion mo = standard_motion(d);
  CollisionReport rep = detect_collisions(d, mo);
  CHECK(rep.cc_vertices == std::vector<int>{1, 2, 4, 5});
  CHECK(rep.kprime_edge_total() == 0);  // all edges interior
  CarCrashVerdict cc = car_crash_audit(d, rep);
  CHECK(cc.lhs == 2);  // 4 collisions + 2 * (1 - k)
  CHECK(cc.holds());
  CHECK(lemma5_audit(d, mo, rep).empty());
}

TEST_CASE("pillow fixture satisfies the standard-motion lemma") {
  for (const HowieDiagram& d : {fixtures::z3_pillow(2), fixtures::cyclic_pillow(3, 3),
                                fixtures::z3_mirror_pillow_m1()}) {
    MultipleMotion mo = standard_motion(d);
    CollisionReport rep = detect_collisions(d, mo);
    auto findings = lemma5_audit(d, mo, rep);
    CAPTURE(findings.empty() ? "" : findings[0]);
    CHECK(findings.empty());
    CHECK(car_crash_audit(d, rep).holds());
    for (const auto& [e, pts] : rep.edge_points)
      CHECK(static_cast<long long>(pts.size()) <= rep.d_constant);
  }
}

TEST_CASE("lemma5 audit flags corrupted reports") {
  HowieDiagram d = fixtures::z3_pillow(2);
  MultipleMotion mo = standard_motion(d);
  CollisionReport rep = detect_collisions(d, mo);

  SUBCASE("boundary edge over the bound") {
    CollisionReport bad = rep;
    std::vector<Rational> many;
    for (int i = 1; i <= 5; ++i) many.push_back(Rational(i, 6));
    bad.edge_points[0] = many;  // bound is k(2m+1) = 2
    bool found = false;
    for (const auto& f : lemma5_audit(d, mo, bad))
      if (f.find("BoundaryEdgeBound") != std::string::npos) found = true;
    CHECK(found);
  }

  SUBCASE("interior collision away from sources and sinks") {
    HowieDiagram md = fixtures::z2_mirror_pillow();
    MultipleMotion mmo = standard_motion(md);
    CollisionReport bad = detect_collisions(md, mmo);
    bad.cc_vertices.push_back(3);  // the (++)/(--) vertex
    bad.vertex_times[3] = {{Rational(1, 2), Rational(1, 2)}};
    auto findings = lemma5_audit(md, mmo, bad);
    bool wrong_vertex = false, wrong_time = false;
    for (const auto& f : findings) {
      if (f.find("neither a source nor a sink") != std::string::npos) wrong_vertex = true;
      if (f.find("non-integer time") != std::string::npos) wrong_time = true;
    }
    CHECK(wrong_vertex);
    CHECK(wrong_time);
  }

  SUBCASE("fabricated collision-free report fails the car-crash inequality") {
    HowieDiagram sphere = fixtures::two_digon_sphere();
    CollisionReport empty;
    empty.kprime_face = {0, 0};
    CarCrashVerdict cc = car_crash_audit(sphere, empty);
    CHECK(cc.lhs == 0);
    CHECK_FALSE(cc.holds());
  }
}

TEST_CASE("combined audit") {
  SUBCASE("pillow with k = 2, m = 0") {
    Section8Report rep = combined_audit(fixtures::z3_pillow(2));
    CHECK(rep.findings.empty());
    CHECK(rep.warnings.empty());
    CHECK(rep.inequality_applicable);
    CHECK(rep.lhs == 31);  // (2 + 3) * 6 - 1 + 2
    CHECK(rep.rhs == 6);
    CHECK(rep.ok());
  }

  SUBCASE("involution hypothesis gap on the Z2 mirror pillow") {
    Section8Report rep = combined_audit(fixtures::z2_mirror_pillow());
    CHECK_FALSE(rep.inequality_applicable);
    bool warned = false;
    for (const auto& w : rep.warnings)
      if (w.find("InvolutionHypothesisGap") != std::string::npos &&
          w.find("case b") != std::string::npos)
        warned = true;
    CHECK(warned);
    // the heavy vertex keeps its positive curvature finding
    bool positive = false;
    for (const auto& f : rep.findings)
      if (f.find("PositiveInteriorVertex: vertex 3") != std::string::npos) positive = true;
    CHECK(positive);
  }

  SUBCASE("spliced digon flags its positive vertex") {
    Section8Report rep = combined_audit(fixtures::digon_spliced_pillow());
    bool positive = false;
    for (const auto& f : rep.findings)
      if (f.find("PositiveInteriorVertex: vertex 1") != std::string::npos) positive = true;
    CHECK(positive);
    CHECK_FALSE(rep.ok());
  }

  SUBCASE("wrong shapes") {
    CHECK_THROWS_WITH_AS(combined_audit(fixtures::cyclic_pillow(3, 1)), "WrongShape: k = 1 < 2",
                         Error);
    PhiPresentation p = fixtures::z3_deep_presentation();
    SurfaceMap m = SurfaceMap::build(4, {3, 2, 1, 0}, {{0, 1}, {2, 3}});
    std::vector<FPWord> a = {FPWord::single(1, 2), FPWord::single(0, 1)};
    std::vector<FPWord> b = {FPWord::single(1, 1), FPWord::single(0, 2)};
    HowieDiagram bare = HowieDiagram::build(std::move(m), {3, 1}, {a, b}, {}, {}, p);
    CHECK_THROWS_AS(combined_audit(bare), Error);
  }

  SUBCASE("combined large-face curvature equals 2 - k + 1 - k") {
    HowieDiagram d = fixtures::z3_pillow(2);
    WeightAssignment nu = section5_weights(d);
    auto gb = gauss_bonnet_report(d.map(), nu);
    Section8Report rep = combined_audit(d);
    CHECK(gb.face_k[0] + Rational(rep.collisions.kprime_face[0]) == Rational(-1));
  }
}
