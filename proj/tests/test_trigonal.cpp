#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sextic/localsing.hpp"
#include "sextic/trigonal.hpp"

using namespace sextic;

namespace {

QPoly qp(std::initializer_list<int> asc) {
  std::vector<Rat> c;
  for (int v : asc) c.emplace_back(v);
  return QPoly(std::move(c));
}

int total_euler(const std::vector<FiberReport>& fibers) {
  int e = 0;
  for (const auto& f : fibers) e += f.euler_total;
  return e;
}

TrigonalCurve random_admissible_curve(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-5, 5);
  while (true) {
    std::vector<Rat> a(3), b(5), c(7);
    for (auto& v : a) v = Rat(d(rng));
    for (auto& v : b) v = Rat(d(rng));
    for (auto& v : c) v = Rat(d(rng));
    try {
      return TrigonalCurve(QPoly(std::move(a)), QPoly(std::move(b)), QPoly(std::move(c)));
    } catch (const DegenerateCurve&) {
    }
  }
}

}  // namespace

TEST_CASE("reduction to the P,Q model") {
  SUBCASE("no quadratic term is the identity") {
    TrigonalCurve c(QPoly(), qp({0, 1}), qp({3}));
    ReducedModel m = reduce(c);
    CHECK(m.P == qp({0, 1}));
    CHECK(m.Q == qp({3}));
  }
  SUBCASE("shifted cusp example") {
    TrigonalCurve c = TrigonalCurve::from_string("y^3 - y^2 - x^3 y + x^3");
    ReducedModel m = reduce(c);
    CHECK(m.P.eval(Rat(0)) == Rat(-1, 3));
  }
  SUBCASE("reduction agrees with the explicit shift, fiber data preserved") {
    std::mt19937 rng(11);
    for (int t = 0; t < 10; ++t) {
      TrigonalCurve c = random_admissible_curve(rng);
      QQ f = c.equation();
      ReducedModel m = reduce(c);
      QQ shifted_eq = qq_shift_y(f, c.a * Rat(-1, 3));
      CHECK(shifted_eq.coeff(2).is_zero());
      CHECK(shifted_eq.coeff(1) == m.P);
      CHECK(shifted_eq.coeff(0) == m.Q);
      CHECK_FALSE(m.discriminant().is_zero());
    }
  }
  SUBCASE("discriminant of the reduction is the y-resultant of F and F_y up to a constant") {
    std::mt19937 rng(23);
    for (int t = 0; t < 8; ++t) {
      TrigonalCurve c = random_admissible_curve(rng);
      QQ f = c.equation();
      QPoly res = ring_resultant<QPoly>(f, qq_dy(f));
      // disc_y of a monic cubic is -Res_y(F, F_y)
      CHECK(reduce(c).discriminant() == -res);
    }
  }
}

TEST_CASE("kodaira table sanity") {
  CHECK(classify_orders(0, 0, 1).name() == "I1");
  CHECK(classify_orders(0, 0, 5).name() == "I5");
  CHECK(classify_orders(1, 1, 2).name() == "II");
  CHECK(classify_orders(1, 2, 3).name() == "III");
  CHECK(classify_orders(2, 2, 4).name() == "IV");
  CHECK(classify_orders(2, 3, 6).name() == "I0*");
  CHECK(classify_orders(2, 3, 9).name() == "I3*");
  CHECK(classify_orders(3, 4, 8).name() == "IV*");
  CHECK(classify_orders(3, 5, 9).name() == "III*");
  CHECK(classify_orders(4, 5, 10).name() == "II*");
  CHECK(classify_orders(4, 6, 12).name() == "NonMinimal");
  CHECK(classify_orders(kInfiniteOrder, 2, 4).name() == "IV");
  // merge arithmetic: two I1 fuse into II, an I2 and an I1 fuse into III
  CHECK(euler_number(classify_orders(1, 1, 2), 2) ==
        euler_number(classify_orders(0, 0, 1), 1) + euler_number(classify_orders(0, 0, 1), 1));
  CHECK(euler_number(classify_orders(1, 2, 3), 3) ==
        euler_number(classify_orders(0, 0, 2), 2) + euler_number(classify_orders(0, 0, 1), 1));
}

TEST_CASE("singular fibers of pinned curves") {
  SUBCASE("three IV fibers") {
    ReducedModel m(QPoly(), qpoly_from_string("(x^3+1)^2"));
    auto fibers = singular_fibers(m);
    REQUIRE(fibers.size() == 2);  // orbit x+1 and orbit x^2-x+1
    int points = 0;
    for (const auto& f : fibers) {
      CHECK(f.kodaira.name() == "IV");
      CHECK(f.euler == 4);
      points += f.location.orbit_size();
    }
    CHECK(points == 3);
    CHECK(total_euler(fibers) == 12);
    CHECK(sigma_from_fibers(m).name() == "3A2");
  }
  SUBCASE("shifted cusp curve has a triple fiber at the cusp") {
    ReducedModel m = reduce(TrigonalCurve::from_string("y^3 - y^2 - x^3 y + x^3"));
    auto fibers = singular_fibers(m);
    bool found_triple = false;
    for (const auto& f : fibers)
      if (f.location.text() == "0") {
        CHECK(f.kodaira.name() == "I3");
        CHECK(f.euler == 3);
        found_triple = true;
      }
    CHECK(found_triple);
    CHECK(total_euler(fibers) == 12);
    CHECK(sigma_from_fibers(m).name() == "A2+4A1");
  }
  SUBCASE("non-minimal fiber is reported, not classified") {
    ReducedModel m(qp({0, 0, 0, 0, 1}), qp({0, 0, 0, 0, 0, 0, 1}));
    auto fibers = singular_fibers(m);
    REQUIRE(fibers.size() == 1);
    CHECK(fibers[0].kodaira.name() == "NonMinimal");
    CHECK_THROWS_AS(sigma_from_fibers(m), DegenerateCurve);
  }
}

TEST_CASE("twelve-fiber budget on random curves") {
  std::mt19937 rng(20250808);
  for (int t = 0; t < 100; ++t) {
    TrigonalCurve c = random_admissible_curve(rng);
    CHECK(total_euler(singular_fibers(reduce(c))) == 12);
  }
}

TEST_CASE("a curve with squarefree discriminant has twelve I1 fibers") {
  std::mt19937 rng(424242);
  int found = 0;
  for (int t = 0; t < 50 && found < 6; ++t) {
    TrigonalCurve c = random_admissible_curve(rng);
    ReducedModel m = reduce(c);
    QPoly d = m.discriminant();
    if (d.deg() != 12 || gcd(d, derivative(d)).deg() != 0) continue;
    int points = 0;
    for (const auto& f : singular_fibers(m)) {
      CHECK(f.kodaira.name() == "I1");
      points += f.location.orbit_size();
    }
    CHECK(points == 12);
    ++found;
  }
  CHECK(found == 6);
}

TEST_CASE("budget is invariant under x reparametrization") {
  std::mt19937 rng(5150);
  for (int t = 0; t < 12; ++t) {
    TrigonalCurve c = random_admissible_curve(rng);
    ReducedModel m = reduce(c);
    Rat alpha(1 + static_cast<int>(rng() % 4)), beta(static_cast<int>(rng() % 7) - 3);
    QPoly sub(std::vector<Rat>{beta, alpha});  // x -> alpha x + beta
    ReducedModel m2(compose(m.P, sub), compose(m.Q, sub));
    auto f1 = singular_fibers(m), f2 = singular_fibers(m2);
    CHECK(total_euler(f1) == 12);
    CHECK(total_euler(f2) == 12);
    std::multiset<std::string> t1, t2;
    for (auto& f : f1) t1.insert(f.kodaira.name() + "/" + std::to_string(f.location.orbit_size()));
    for (auto& f : f2) t2.insert(f.kodaira.name() + "/" + std::to_string(f.location.orbit_size()));
    CHECK(t1 == t2);
  }
}

TEST_CASE("singular point classification") {
  SUBCASE("three cusps") {
    auto pts = classify_singular_points(TrigonalCurve::from_string("y^3 + (x^3+1)^2"));
    REQUIRE(pts.size() == 2);
    int total = 0;
    for (const auto& p : pts) {
      CHECK(p.simple);
      CHECK(p.type.name() == "A2");
      CHECK(p.milnor == 2);
      total += p.orbit_size;
    }
    CHECK(total == 3);
  }
  SUBCASE("smooth curve has no singular points") {
    // y^3 + x^6 + x: all twelve fibers are of type II, so B is smooth
    auto pts = classify_singular_points(TrigonalCurve(QPoly(), QPoly(), qp({0, 1, 0, 0, 0, 0, 1})));
    CHECK(pts.empty());
  }
  SUBCASE("an affine-smooth equation can still hide a point at infinity") {
    // y^3 + y + x has an II* fiber at infinity, an E8 point of B
    auto pts = classify_singular_points(TrigonalCurve(QPoly(), qp({1}), qp({0, 1})));
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].at_infinity);
    CHECK(pts[0].type.name() == "E8");
  }
  SUBCASE("non-simple point is flagged with its milnor number") {
    auto pts = classify_singular_points(TrigonalCurve(QPoly(), qp({0, 0, 0, 0, 1}), QPoly()));
    REQUIRE(pts.size() == 1);
    CHECK_FALSE(pts[0].simple);
    CHECK(pts[0].milnor == 10);
    CHECK(pts[0].nonsimple_label.find("triple") != std::string::npos);
  }
  SUBCASE("points at infinity are found") {
    auto pts = classify_singular_points(TrigonalCurve::from_string("y^3 - y^2 - x^3 y + x^3"));
    std::multiset<std::string> types;
    int count = 0;
    for (const auto& p : pts) {
      for (int i = 0; i < p.orbit_size; ++i) types.insert(p.type.name());
      count += p.orbit_size;
    }
    CHECK(count == 5);
    CHECK(types == std::multiset<std::string>{"A1", "A1", "A1", "A1", "A2"});
  }
}

TEST_CASE("dictionary: fibers against direct point classification") {
  std::mt19937 rng(777);
  int checked = 0;
  for (int t = 0; t < 200 && checked < 8; ++t) {
    TrigonalCurve c = random_admissible_curve(rng);
    ReducedModel m = reduce(c);
    bool minimal = true;
    for (auto& f : singular_fibers(m)) minimal = minimal && f.kodaira.minimal();
    if (!minimal) continue;
    RootSystemSpec from_fibers = sigma_from_fibers(m);
    std::vector<ADESymbol> direct;
    for (const auto& p : classify_singular_points(c)) {
      REQUIRE(p.simple);
      for (int i = 0; i < p.orbit_size; ++i) direct.push_back(p.type);
    }
    CHECK(RootSystemSpec(direct) == from_fibers);
    ++checked;
  }
  CHECK(checked >= 8);
  // named examples
  for (const char* eq : {"y^3 + (x^3+1)^2", "y^3 - y^2 - x^3 y + x^3"}) {
    TrigonalCurve c = TrigonalCurve::from_string(eq);
    std::vector<ADESymbol> direct;
    for (const auto& p : classify_singular_points(c))
      for (int i = 0; i < p.orbit_size; ++i) direct.push_back(p.type);
    CHECK(RootSystemSpec(direct) == sigma_from_fibers(reduce(c)));
  }
}

TEST_CASE("genus bookkeeping") {
  CHECK(genus(TrigonalCurve(QPoly(), QPoly(), qp({0, 1, 0, 0, 0, 0, 1}))) == 4);  // smooth
  CHECK(genus(TrigonalCurve::from_string("y^3 + (x^3+1)^2")) == 1);
  CHECK_THROWS_AS(genus(TrigonalCurve(QPoly(), qp({0, 0, 0, 0, 1}), QPoly())), NonSimplePoint);
  std::mt19937 rng(31);
  for (int t = 0; t < 30; ++t) {
    TrigonalCurve c = random_admissible_curve(rng);
    if (!classify_singular_points(c).empty()) continue;
    CHECK(genus(c) == 4);
  }
}

TEST_CASE("table 1 assembly on the three-cusp curve") {
  ReducedModel m(QPoly(), qpoly_from_string("(x^3+1)^2"));
  SUBCASE("generic smooth fiber") {
    SexticSpec s = sextic_singularities(m, FiberChoice::at(Rat(5)));
    CHECK(s.distinguished == "J2,0");
    CHECK(s.remaining.name() == "3A2");
  }
  SUBCASE("the rational IV fiber consumes its cusp") {
    SexticSpec s = sextic_singularities(m, FiberChoice::at(Rat(-1)));
    CHECK(s.distinguished == "E14");
    CHECK(s.remaining.name() == "2A2");
  }
  SUBCASE("orbit choice") {
    SexticSpec s = sextic_singularities(m, FiberChoice::orbit(qpoly_from_string("x^2 - x + 1")));
    CHECK(s.distinguished == "E14");
    CHECK(s.remaining.name() == "2A2");
  }
}

TEST_CASE("associated cubic") {
  SUBCASE("pinned example") {
    TrigonalCurve c = TrigonalCurve::from_string("y^3 + x^2 y + x^3");
    PlaneCurve g = associated_cubic(c, Rat(0));
    CHECK(g.degree == 3);
    CHECK(to_string(g.f) == "y^3 + y + 1");
  }
  SUBCASE("substitution identity and degree bound") {
    // D4-type triple point at the origin
    TrigonalCurve c = TrigonalCurve::from_string("y^3 - 3x^2 y + x^3 + x^4");
    PlaneCurve g = associated_cubic(c, Rat(0));
    CHECK(g.degree == 3);
    CHECK(total_degree(g.f) <= 3);
    // x^3 G(x, y) = F(x, x y)
    QQ lhs = g.f * QPoly(std::vector<Rat>{Rat(0), Rat(0), Rat(0), Rat(1)});
    QQ rhs;
    {
      QQ f = c.equation();
      // substitute y -> x*y
      std::vector<QPoly> cc;
      QPoly xp = QPoly::x(), pw = QPoly::constant(Rat(1));
      for (int j = 0; j <= f.deg(); ++j) {
        cc.push_back(f.coeff(j) * pw);
        pw = pw * xp;
      }
      rhs = QQ(std::move(cc));
    }
    CHECK(lhs == rhs);
  }
  SUBCASE("no triple point is an error") {
    TrigonalCurve c = TrigonalCurve::from_string("y^3 + (x^3+1)^2");
    CHECK_THROWS_AS(associated_cubic(c, Rat(-1)), std::invalid_argument);
  }
}

TEST_CASE("associated quartic identity") {
  // node at x=0: y^3 + x^2 y^2 - y^2 + x^3 y ... pick a curve with a double point at (0,0):
  // F = y^3 + y^2 - x^2 y: F(0,y) = y^3+y^2 double root 0; Fx(0,0)=0
  TrigonalCurve c = TrigonalCurve::from_string("y^3 + y^2 - x^2 y");
  PlaneCurve q = associated_quartic(c, Rat(0));
  CHECK(q.degree == 4);
  CHECK(total_degree(q.f) <= 4);
  QQ lhs = q.f * QPoly(std::vector<Rat>{Rat(0), Rat(0), Rat(1)});
  QQ rhs;
  {
    QQ f = c.equation();
    std::vector<QPoly> cc;
    QPoly xp = QPoly::x(), pw = QPoly::constant(Rat(1));
    for (int j = 0; j <= f.deg(); ++j) {
      cc.push_back(f.coeff(j) * pw);
      pw = pw * xp;
    }
    rhs = QQ(std::move(cc));
  }
  CHECK(lhs == rhs);
  CHECK_THROWS_AS(associated_quartic(TrigonalCurve::from_string("y^3 + y + x"), Rat(0)), std::invalid_argument);
}

TEST_CASE("local intersection indices") {
  QQ y = qq_from_string("y"), x = qq_from_string("x");
  CHECK(local_intersection_index(y, x, Rat(0), Rat(0)) == 1);
  CHECK(local_intersection_index(qq_from_string("y^2 - x^3"), y, Rat(0), Rat(0)) == 3);
  // the two cuspidal cubics share the tangent y = 0, so the index exceeds
  // mult*mult = 4: both the resultant route (ord 4x^6) and the local algebra
  // K[[x,y]]/(y^2, x^3) give 6
  CHECK(local_intersection_index(qq_from_string("y^2 - x^3"), qq_from_string("y^2 + x^3"), Rat(0), Rat(0)) == 6);
  CHECK_THROWS_AS(local_intersection_index(qq_from_string("y^2 - x y"), y, Rat(0), Rat(0)), std::invalid_argument);
  // resultant route against the local-algebra dimension
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int t = 0; t < 12; ++t) {
    QQ f = qq_from_string("y^2") + x * x * x * QPoly::constant(Rat(d(rng))) + x * y * QPoly::constant(Rat(d(rng)));
    QQ g = qq_from_string("x^2") * QPoly::constant(Rat(1 + (rng() % 3))) + y * y * y * QPoly::constant(Rat(d(rng))) +
           x * y * QPoly::constant(Rat(d(rng)));
    try {
      int via_res = local_intersection_index(f, g, Rat(0), Rat(0));
      int via_dim = local_dimension_at_origin(kk_lift(f), kk_lift(g));
      CHECK(via_res == via_dim);
    } catch (const std::invalid_argument&) {
    }
  }
}
