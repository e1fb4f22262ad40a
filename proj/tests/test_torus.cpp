#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sextic/torus.hpp"

using namespace sextic;

namespace {

QPoly qs(const char* s) { return qpoly_from_string(s); }

// corpus models with known singularity content
ReducedModel model_3a2() { return ReducedModel(QPoly(), qs("(x^3+1)^2")); }
ReducedModel model_4a2() { return ReducedModel(qs("6x^3 - 3"), qs("x^6 - 10x^3 - 2")); }
ReducedModel model_a8() { return ReducedModel(qs("6x^3 - 27"), qs("x^6 - 18x^3 + 54")); }
ReducedModel model_a5a2() { return ReducedModel(qs("6x^3 - 6x^2 - 27"), qs("(x^3 - x^2 - 9)^2 - 27")); }
ReducedModel model_e6a2() { return ReducedModel(QPoly(), qs("x^4 (x-1)^2")); }
ReducedModel model_2a4() {
  return ReducedModel(qs("-13261/3 x^4 - 5089/6 x^3 - 179/3 x^2 - 11/6 x - 1/48"),
                      qs("-12212947/108 x^6 - 293008/9 x^5 - 46225/12 x^4 - 51875/216 x^3 - 25/3 x^2 - 11/72 x - 1/864"));
}

}  // namespace

TEST_CASE("the corpus models carry the advertised singularities") {
  CHECK(sigma_from_fibers(model_3a2()).name() == "3A2");
  CHECK(sigma_from_fibers(model_4a2()).name() == "4A2");
  CHECK(sigma_from_fibers(model_a8()).name() == "A8");
  CHECK(sigma_from_fibers(model_a5a2()).name() == "A5+A2");
  CHECK(sigma_from_fibers(model_e6a2()).name() == "E6+A2");
  CHECK(sigma_from_fibers(model_2a4()).name() == "2A4");
}

TEST_CASE("verify_torus") {
  ReducedModel m = model_3a2();
  CHECK(verify_torus(m, TorusStructure::rational(QPoly(), QPoly(), qs("x^3+1"))));
  CHECK_FALSE(verify_torus(m, TorusStructure::rational(QPoly(), QPoly(), qs("x^3+2"))));
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int t = 0; t < 30; ++t) {
    QPoly b(std::vector<Rat>{Rat(d(rng)), Rat(d(rng)), Rat(d(rng))});
    QPoly l(std::vector<Rat>{Rat(d(rng)), Rat(d(rng))});
    QPoly e(std::vector<Rat>{Rat(d(rng)), Rat(d(rng)), Rat(d(rng)), Rat(d(rng))});
    try {
      TrigonalCurve c = compose_torus(b, l, e);
      CHECK(verify_torus(c, TorusStructure::rational(b, l, e)));
    } catch (const DegenerateCurve&) {
    }
  }
  CHECK_THROWS_AS(verify_torus(m, TorusStructure::rational(qs("x^3"), QPoly(), QPoly())), std::invalid_argument);
}

TEST_CASE("detection on the corpus") {
  SUBCASE("three cusps: a single rational structure") {
    auto rep = detect_torus(model_3a2());
    CHECK(rep.count_over_closure == 1);
    REQUIRE(rep.structures.size() == 1);
    CHECK(rep.structures[0].field == nullptr);
    CHECK(rep.structures[0].l.is_zero());
  }
  SUBCASE("four cusps: four structures, one rational") {
    auto rep = detect_torus(model_4a2());
    CHECK(rep.count_over_closure == 4);
    int rational = 0, ext_degrees = 0;
    for (const auto& s : rep.structures) {
      if (!s.field)
        ++rational;
      else
        ext_degrees += s.field->degree();
    }
    CHECK(rational == 1);
    // the remaining three conjugate structures: presented over one sextic field
    // (pairs quotiented) or a cubic orbit, depending on the primitive element
    CHECK(ext_degrees == 6);
  }
  SUBCASE("no structures on the 2A4 model") {
    auto rep = detect_torus(model_2a4());
    CHECK(rep.count_over_closure == 0);
    CHECK(rep.structures.empty());
  }
  SUBCASE("single structures on the remaining torus rows") {
    CHECK(detect_torus(model_a8()).count_over_closure == 1);
    CHECK(detect_torus(model_a5a2()).count_over_closure == 1);
    CHECK(detect_torus(model_e6a2()).count_over_closure == 1);
  }
}

TEST_CASE("lattice cross-check: detected counts match the 3-torsion subgroup counts") {
  CHECK(expected_torus_count(parse_spec("4A2")) == 4);
  CHECK(expected_torus_count(parse_spec("3A2")) == 1);
  CHECK(expected_torus_count(parse_spec("A5+A2")) == 1);
  CHECK(expected_torus_count(parse_spec("A8")) == 1);
  CHECK(expected_torus_count(parse_spec("E6+A2")) == 1);
  CHECK(expected_torus_count(parse_spec("2A4")) == 0);
  CHECK(detect_torus(model_4a2()).count_over_closure == expected_torus_count(parse_spec("4A2")));
  CHECK(detect_torus(model_3a2()).count_over_closure == expected_torus_count(parse_spec("3A2")));
  CHECK(detect_torus(model_a8()).count_over_closure == expected_torus_count(parse_spec("A8")));
  CHECK(detect_torus(model_a5a2()).count_over_closure == expected_torus_count(parse_spec("A5+A2")));
  CHECK(detect_torus(model_e6a2()).count_over_closure == expected_torus_count(parse_spec("E6+A2")));
  CHECK(detect_torus(model_2a4()).count_over_closure == expected_torus_count(parse_spec("2A4")));
}

TEST_CASE("round trip: composed structures are recovered") {
  std::mt19937 rng(20250811);
  std::uniform_int_distribution<int> d(-3, 3);
  int done = 0;
  for (int t = 0; t < 200 && done < 30; ++t) {
    QPoly b(std::vector<Rat>{Rat(d(rng)), Rat(d(rng)), Rat(d(rng))});
    QPoly l(std::vector<Rat>{Rat(d(rng)), Rat(d(rng))});
    QPoly e(std::vector<Rat>{Rat(d(rng)), Rat(d(rng)), Rat(d(rng)), Rat(d(rng))});
    TrigonalCurve c = [&]() -> TrigonalCurve {
      try {
        return compose_torus(b, l, e);
      } catch (const DegenerateCurve&) {
        return TrigonalCurve(QPoly(), QPoly(), qs("x^6+x"));  // sentinel, skipped below
      } catch (const std::invalid_argument&) {
        return TrigonalCurve(QPoly(), QPoly(), qs("x^6+x"));
      }
    }();
    if (c.equation() == TrigonalCurve(QPoly(), QPoly(), qs("x^6+x")).equation()) continue;
    ReducedModel m = reduce(c);
    // in the reduced chart the planted structure becomes (-l^2/3, l, e - l a/3)
    QPoly lred = l, ered = e - l * c.a * Rat(1, 3);
    auto rep = detect_torus(m);
    bool found = false;
    for (const auto& s : rep.structures) {
      if (s.field) continue;
      if ((s.l == kp_lift(lred) && s.e == kp_lift(ered)) || (s.l == kp_lift(-lred) && s.e == kp_lift(-ered)))
        found = true;
    }
    CHECK(found);
    ++done;
  }
  CHECK(done == 30);
}

TEST_CASE("inner and outer points") {
  SUBCASE("all cusps of the three-cusp curve are inner") {
    auto rep = detect_torus(model_3a2());
    REQUIRE(rep.structures.size() == 1);
    auto split = inner_outer_split(model_3a2(), rep.structures[0]);
    CHECK(split.inner_total() == 3);
    CHECK(split.outer_total() == 0);
  }
  SUBCASE("each 4A2 structure sees three inner cusps and one outer") {
    auto rep = detect_torus(model_4a2());
    REQUIRE(rep.structures.size() == 2);
    for (const auto& s : rep.structures) {
      auto split = inner_outer_split(model_4a2(), s);
      CHECK(split.inner_total() == 3);
      CHECK(split.outer_total() == 1);
    }
  }
  SUBCASE("smooth torus curve has an empty labeling") {
    // (y+1)^3 + (x y + x^3)^2 is smooth when the discriminant is squarefree
    TrigonalCurve c = compose_torus(qs("1"), qs("x"), qs("x^3"));
    ReducedModel m = reduce(c);
    auto pts = classify_singular_points(TrigonalCurve(QPoly(), m.P, m.Q));
    if (pts.empty()) {
      auto rep = detect_torus(m);
      REQUIRE(!rep.structures.empty());
      auto split = inner_outer_split(m, rep.structures[0]);
      CHECK(split.points.empty());
    }
  }
}

TEST_CASE("newton polygon divisibility instances") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> d(1, 5);
  SUBCASE("A2 with q of type (2,1), first power") {
    int ok = 0;
    for (int t = 0; t < 40 && ok < 10; ++t) {
      NewtonCheckInstance inst;
      inst.family = ADEFamily::A;
      inst.k = 1;
      inst.power = 1;
      inst.p = qq_from_string("y") + qq_from_string("x") * QPoly::constant(Rat(d(rng)));
      inst.q = qq_from_string("y") * QPoly::constant(Rat(d(rng))) + qq_from_string("x^2") * QPoly::constant(Rat(d(rng)));
      inst.h = qq_from_string("x^2") * QPoly::constant(Rat(d(rng))) + qq_from_string("x y") * QPoly::constant(Rat(d(rng))) +
               qq_from_string("y^2") * QPoly::constant(Rat(d(rng)));
      auto rep = newton_divisibility_check(inst);
      if (!rep.hypotheses_ok) continue;
      CHECK(rep.bound == Rat(2));
      CHECK(rep.satisfied);
      ++ok;
    }
    CHECK(ok == 10);
  }
  SUBCASE("A2 with q only of type (1,1), both powers") {
    for (int power : {1, 2}) {
      int ok = 0;
      for (int t = 0; t < 60 && ok < 8; ++t) {
        NewtonCheckInstance inst;
        inst.k = 1;
        inst.power = power;
        inst.weak_q = true;
        inst.p = qq_from_string("y") + qq_from_string("x") * QPoly::constant(Rat(d(rng)));
        // q of type (1,1) with a quadratic tail so that phi can be a cusp
        inst.q = qq_from_string("y") * QPoly::constant(Rat(d(rng))) + qq_from_string("x") * QPoly::constant(Rat(d(rng))) +
                 qq_from_string("x^2") * QPoly::constant(Rat(d(rng)));
        // power 1: h free of linear terms keeps the quadratic part of rank one;
        // power 2: a linear term of h supplies the cubic of the cusp
        inst.h = qq_from_string("x^2") * QPoly::constant(Rat(d(rng))) + qq_from_string("x y") * QPoly::constant(Rat(d(rng))) +
                 qq_from_string("y^2") * QPoly::constant(Rat(d(rng)));
        if (power == 2) inst.h = inst.h + qq_from_string("x") * QPoly::constant(Rat(d(rng)));
        auto rep = newton_divisibility_check(inst);
        if (!rep.hypotheses_ok) continue;
        CHECK(rep.bound == Rat(1));
        CHECK(rep.satisfied);
        ++ok;
      }
      CHECK(ok == 8);
    }
  }
  SUBCASE("A2 with q of type (2,1), second power") {
    int ok = 0;
    for (int t = 0; t < 60 && ok < 8; ++t) {
      NewtonCheckInstance inst;
      inst.k = 1;
      inst.power = 2;
      inst.p = qq_from_string("y") + qq_from_string("x") * QPoly::constant(Rat(d(rng)));
      inst.q = qq_from_string("y") * QPoly::constant(Rat(d(rng))) + qq_from_string("x^2") * QPoly::constant(Rat(d(rng)));
      inst.h = qq_from_string("x") * QPoly::constant(Rat(d(rng))) + qq_from_string("y") * QPoly::constant(Rat(d(rng))) +
               qq_from_string("x^2") * QPoly::constant(Rat(d(rng)));
      auto rep = newton_divisibility_check(inst);
      if (!rep.hypotheses_ok) continue;
      CHECK(rep.bound == Rat(1));  // k = 1
      CHECK(rep.satisfied);
      ++ok;
    }
    CHECK(ok == 8);
  }
  SUBCASE("E6 instances") {
    int ok = 0;
    for (int t = 0; t < 80 && ok < 8; ++t) {
      NewtonCheckInstance inst;
      inst.family = ADEFamily::E;
      inst.k = 6;
      inst.power = 1;
      inst.p = qq_from_string("y") + qq_from_string("x^2") * QPoly::constant(Rat(d(rng)));
      inst.q = qq_from_string("x^2") * QPoly::constant(Rat(d(rng))) + qq_from_string("x y") * QPoly::constant(Rat(d(rng))) +
               qq_from_string("y^2") * QPoly::constant(Rat(d(rng)));
      inst.h = qq_from_string("y^2") * QPoly::constant(Rat(d(rng))) + qq_from_string("x^3") * QPoly::constant(Rat(d(rng)));
      auto rep = newton_divisibility_check(inst);
      if (!rep.hypotheses_ok) continue;
      CHECK(rep.bound == Rat(3));
      CHECK(rep.satisfied);
      ++ok;
    }
    CHECK(ok == 8);
  }
  SUBCASE("hypothesis violations are reported, not asserted") {
    NewtonCheckInstance inst;
    inst.k = 1;
    inst.power = 1;
    inst.p = qq_from_string("y");  // missing the x^k corner
    inst.q = qq_from_string("y + x^2");
    inst.h = qq_from_string("x^2");
    auto rep = newton_divisibility_check(inst);
    CHECK_FALSE(rep.hypotheses_ok);
    CHECK(!rep.reason.empty());
  }
}
