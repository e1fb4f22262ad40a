#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sextic/localsing.hpp"
#include "sextic/torus.hpp"

using namespace sextic;

namespace {

QPoly qs(const char* s) { return qpoly_from_string(s); }

TrigonalCurve curve_2a4() {
  ReducedModel m(qs("-13261/3 x^4 - 5089/6 x^3 - 179/3 x^2 - 11/6 x - 1/48"),
                 qs("-12212947/108 x^6 - 293008/9 x^5 - 46225/12 x^4 - 51875/216 x^3 - 25/3 x^2 - 11/72 x - 1/864"));
  return TrigonalCurve(QPoly(), m.P, m.Q);
}

TrigonalCurve curve_a4a3() {
  return TrigonalCurve(qs("-216325/10878976 x^2 + 407383/2039808 x - 7055/18432"),
                       qs("614125/2785017856 x^4 - 1164925/1044381696 x^3 + 1096999/783286272 x^2 + 85/3538944 x"),
                       qs("425/25065160704 x^4 - 3319/75195482112 x^3 - 85/225586446336 x^2"));
}

// germ classification of a plane curve at a rational point
GermClass germ_at(const QQ& f, const Rat& x0, const Rat& y0) {
  return classify_germ_at_origin(kk_lift(qq_translate(f, x0, y0)));
}

// the double root in y of f(x0, y), which must exist and be rational
Rat double_root_at(const QQ& f, const Rat& x0) {
  std::vector<Rat> c;
  for (int j = 0; j <= f.deg(); ++j) c.push_back(f.coeff(j).eval(x0));
  QPoly fiber{std::move(c)};
  QPoly g = gcd(fiber, derivative(fiber));
  REQUIRE(g.deg() == 1);
  return -g.coeff(0) / g.coeff(1);
}

}  // namespace

TEST_CASE("the 2A4 model blows down to a quartic with A4 + A2, tangent through the cusp") {
  TrigonalCurve c = curve_2a4();
  REQUIRE(sigma_from_fibers(reduce(c)).name() == "2A4");
  PlaneCurve q = associated_quartic(c, Rat(0));
  CHECK(q.degree == 4);
  CHECK(total_degree(q.f) <= 4);
  // the leftover of the blown-up A4 sits on the image line x = 0 as a cusp
  Rat y0 = double_root_at(q.f, Rat(0));
  GermClass g0 = germ_at(q.f, Rat(0), y0);
  CHECK(g0.simple);
  CHECK(g0.type.name() == "A2");
  // the untouched A4 of the model keeps its fiber coordinate x = -1/25
  Rat y1 = double_root_at(q.f, Rat(-1, 25));
  GermClass g1 = germ_at(q.f, Rat(-1, 25), y1);
  CHECK(g1.simple);
  CHECK(g1.type.name() == "A4");
}

TEST_CASE("the A4+A3 model blows down to a quartic with A4 + A1, tangent through the node") {
  TrigonalCurve c = curve_a4a3();
  REQUIRE(sigma_from_fibers(reduce(c)).name() == "A4+A3");
  // the A3 point sits on the fiber x = 0
  PlaneCurve q = associated_quartic(c, Rat(0));
  CHECK(q.degree == 4);
  Rat y0 = double_root_at(q.f, Rat(0));
  GermClass g0 = germ_at(q.f, Rat(0), y0);
  CHECK(g0.simple);
  CHECK(g0.type.name() == "A1");
  Rat y1 = double_root_at(q.f, Rat(8, 3));
  GermClass g1 = germ_at(q.f, Rat(8, 3), y1);
  CHECK(g1.simple);
  CHECK(g1.type.name() == "A4");
}

TEST_CASE("round trip through the quartic transform") {
  // x^2 G(x, y/x) recovers the curve equation for both corpus models
  for (const TrigonalCurve& c : {curve_2a4(), curve_a4a3()}) {
    Rat x0(0);
    PlaneCurve q = associated_quartic(c, x0);
    QQ lhs = q.f * QPoly(std::vector<Rat>{Rat(0), Rat(0), Rat(1)});
    QQ fshift;
    {
      QPoly a = shifted(c.a, x0), b = shifted(c.b, x0), cc = shifted(c.c, x0);
      // the transform first moves the double point to y = 0
      QQ f = TrigonalCurve(a, b, cc).equation();
      Rat a0 = a.eval(Rat(0)), b0 = b.eval(Rat(0)), c0 = cc.eval(Rat(0));
      QPoly fiber(std::vector<Rat>{c0, b0, a0, Rat(1)});
      QPoly g = gcd(fiber, derivative(fiber));
      Rat y0 = -g.coeff(0) / g.coeff(1);
      f = qq_translate(f, Rat(0), y0);
      std::vector<QPoly> cc2;
      QPoly xp = QPoly::x(), pw = QPoly::constant(Rat(1));
      for (int j = 0; j <= f.deg(); ++j) {
        cc2.push_back(f.coeff(j) * pw);
        pw = pw * xp;
      }
      fshift = QQ(std::move(cc2));
    }
    CHECK(lhs == fshift);
  }
}

TEST_CASE("sextic assembly on the A4+A3 model") {
  ReducedModel m = reduce(curve_a4a3());
  SexticSpec s0 = sextic_singularities(m, FiberChoice::at(Rat(5)));
  CHECK(s0.distinguished == "J2,0");
  CHECK(s0.remaining.name() == "A4+A3");
  SexticSpec s1 = sextic_singularities(m, FiberChoice::at(Rat(0)));  // the I4 fiber
  CHECK(s1.distinguished == "J2,4");
  CHECK(s1.remaining.name() == "A4");
  SexticSpec s2 = sextic_singularities(m, FiberChoice::at(Rat(8, 3)));  // the I5 fiber
  CHECK(s2.distinguished == "J2,5");
  CHECK(s2.remaining.name() == "A3");
}
