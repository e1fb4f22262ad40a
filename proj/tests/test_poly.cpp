#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sextic/factor.hpp"
#include "sextic/numfield.hpp"
#include "sextic/poly.hpp"

using namespace sextic;

namespace {

QPoly qp(std::initializer_list<int> asc) {
  std::vector<Rat> c;
  for (int v : asc) c.emplace_back(v);
  return QPoly(std::move(c));
}

QPoly random_poly(std::mt19937& rng, int maxdeg, int span = 9) {
  std::uniform_int_distribution<int> d(-span, span);
  std::uniform_int_distribution<int> dd(0, maxdeg);
  int deg = dd(rng);
  std::vector<Rat> c(deg + 1);
  for (auto& x : c) x = Rat(d(rng));
  return QPoly(std::move(c));
}

}  // namespace

TEST_CASE("arithmetic and division") {
  QPoly a = qp({1, 2, 1});  // (x+1)^2
  QPoly b = qp({1, 1});
  CHECK(exact_div(a, b) == b);
  auto [q, r] = divmod(qp({1, 0, 0, 1}), qp({1, 1}));
  CHECK(qp({1, 1}) * q + r == qp({1, 0, 0, 1}));
  CHECK(gcd(a, qp({1, 1})) == b);
  CHECK(derivative(a) == qp({2, 2}));
  CHECK(shifted(qp({0, 0, 1}), Rat(1)) == qp({1, 2, 1}));
  CHECK(qp({0, 1, 4}).eval(Rat(2)) == Rat(18));
}

TEST_CASE("string round trips") {
  CHECK(qpoly_from_string("x^2 + 2x + 1") == qp({1, 2, 1}));
  CHECK(qpoly_from_string("(x^3+1)^2") == qp({1, 0, 0, 2, 0, 0, 1}));
  CHECK(qpoly_from_string("-x/2 + 1/3") == QPoly(std::vector<Rat>{Rat(1, 3), Rat(-1, 2)}));
  CHECK(to_string(qp({1, 2, 1})) == "x^2 + 2*x + 1");
  CHECK(to_string(qp({0, -1})) == "-x");
  CHECK(rat_from_string("-3/4") == Rat(-3, 4));
}

TEST_CASE("resultants on pinned pairs") {
  // res(x^2-1, x^2+x) = 0 (common root -1)
  CHECK(resultant(qp({-1, 0, 1}), qp({0, 1, 1})) == Rat(0));
  // res(x^2+1, x+2) = (-2)^2+1 = 5
  CHECK(resultant(qp({1, 0, 1}), qp({2, 1})) == Rat(5));
  // res(f,g) = lc(f)^deg g * prod g(roots of f): res(x^2-2, x^3) = (sqrt2 * -sqrt2)^3 = -8
  CHECK(resultant(qp({-2, 0, 1}), qp({0, 0, 0, 1})) == Rat(-8));
}

TEST_CASE("resultant vanishes exactly on common factors (randomized)") {
  std::mt19937 rng(42);
  for (int t = 0; t < 40; ++t) {
    QPoly f = random_poly(rng, 3), g = random_poly(rng, 3), h = random_poly(rng, 2);
    if (f.deg() < 1 || g.deg() < 1 || h.deg() < 1) continue;
    CHECK(resultant(f * h, g * h) == Rat(0));
    Rat rfg = resultant(f, g);
    CHECK((rfg == 0) == (gcd(f, g).deg() > 0));
  }
}

TEST_CASE("squarefree decomposition") {
  QPoly f = qp({1, 1}) * qp({1, 1}) * qp({2, 1}) * qp({0, 0, 1});  // (x+1)^2 (x+2) x^2
  auto sq = squarefree_decomposition(f);
  REQUIRE(sq.size() == 2);
  CHECK(sq[0].first == qp({2, 1}));
  CHECK(sq[0].second == 1);
  CHECK(sq[1].first == qp({0, 1}) * qp({1, 1}));
  CHECK(sq[1].second == 2);
}

TEST_CASE("factorization over Q") {
  SUBCASE("x^3+1") {
    auto f = factorize(qp({1, 0, 0, 1}));
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].factor == qp({1, 1}));
    CHECK(f.factors[1].factor == qp({1, -1, 1}));
  }
  SUBCASE("irreducibles stay whole") {
    CHECK(is_irreducible(qp({1, 1, 1})));
    CHECK(is_irreducible(qp({-2, 0, 1})));
    CHECK(is_irreducible(qp({1, 0, 0, 0, 0, 0, 0, 0, 1})));  // x^8+1
    CHECK_FALSE(is_irreducible(qp({1, 2, 1})));
  }
  SUBCASE("discriminant-style input") {
    // -27 x^3 (x^3+4)^3 up to scalar
    QPoly d = qp({0, 0, 0, 1}) * pow(qp({4, 0, 0, 1}), 3) * Rat(-27);
    auto f = factorize(d);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].factor == qp({0, 1}));
    CHECK(f.factors[0].mult == 3);
    CHECK(f.factors[1].factor == qp({4, 0, 0, 1}));
    CHECK(f.factors[1].mult == 3);
    CHECK(f.lead == Rat(-27));
  }
  SUBCASE("random products reassemble") {
    std::mt19937 rng(7);
    for (int t = 0; t < 25; ++t) {
      QPoly f = random_poly(rng, 4), g = random_poly(rng, 3);
      if (f.deg() < 1 || g.deg() < 1) continue;
      QPoly prod = f * g;
      auto fac = factorize(prod);
      QPoly re = QPoly::constant(fac.lead);
      for (const auto& [p, m] : fac.factors) {
        CHECK(is_irreducible(p));
        re = re * pow(p, m);
      }
      CHECK(re == prod);
    }
  }
}

TEST_CASE("primality helper") {
  CHECK(is_probable_prime(Int(2)));
  CHECK(is_probable_prime(Int(97)));
  CHECK_FALSE(is_probable_prime(Int(1)));
  CHECK_FALSE(is_probable_prime(Int(561)));  // Carmichael
  CHECK(is_probable_prime(Int("170141183460469231731687303715884105727")));  // 2^127-1
  CHECK(next_prime_above(Int(100)) == 101);
}

TEST_CASE("number field arithmetic") {
  NF f = make_field(qp({-2, 0, 1}));  // Q(sqrt 2)
  NFElem s = NFElem::generator(f);
  CHECK(s * s == NFElem(Rat(2)));
  CHECK((s + NFElem(1)) * (s - NFElem(1)) == NFElem(1));
  NFElem inv = NFElem(1) / (s + NFElem(3));  // 1/(3+sqrt2) = (3-sqrt2)/7
  CHECK(inv * (s + NFElem(3)) == NFElem(1));

  // gcd over K[x]: x^2-2 = (x-s)(x+s)
  KPoly p = lift(qp({-2, 0, 1}));
  KPoly lin(std::vector<NFElem>{-s, NFElem(1)});
  CHECK(divides(lin, p));
  CHECK(gcd(p, lin) == to_monic(lin));

  NF f3 = make_field(qp({-2, 0, 0, 1}));  // cbrt(2)
  NFElem c = NFElem::generator(f3);
  CHECK(c * c * c == NFElem(2));
  CHECK((NFElem(1) / c) * c == NFElem(1));
  CHECK(eval_nf(qp({-2, 0, 0, 1}), c).is_zero());
}
