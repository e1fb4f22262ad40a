#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sextic/lattice.hpp"
#include "sextic/rootspec.hpp"

using namespace sextic;

namespace {

IMat random_mat(std::mt19937& rng, int r, int c, int lo = -9, int hi = 9) {
  std::uniform_int_distribution<int> d(lo, hi);
  IMat m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

bool is_canonical_diag(const IMat& d) {
  const int n = std::min(d.rows(), d.cols());
  for (int i = 0; i < d.rows(); ++i)
    for (int j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) return false;
  bool zero_seen = false;
  for (int i = 0; i < n; ++i) {
    if (d(i, i) < 0) return false;
    if (d(i, i) == 0) zero_seen = true;
    else if (zero_seen) return false;
    if (i > 0 && d(i - 1, i - 1) != 0 && d(i, i) != 0 && d(i, i) % d(i - 1, i - 1) != 0) return false;
  }
  return true;
}

std::vector<Int> diag_of(const IMat& d) {
  std::vector<Int> v;
  for (int i = 0; i < std::min(d.rows(), d.cols()); ++i) v.push_back(d(i, i));
  return v;
}

}  // namespace

TEST_CASE("smith normal form on pinned inputs") {
  SUBCASE("identity") {
    auto s = smith_normal_form(IMat::identity(2));
    CHECK(diag_of(s.d) == std::vector<Int>{1, 1});
  }
  SUBCASE("A2 Cartan matrix") {
    IMat m(2, 2, {2, -1, -1, 2});
    CHECK(det(m) == 3);  // determinant oracle
    auto s = smith_normal_form(m);
    CHECK(diag_of(s.d) == std::vector<Int>{1, 3});
  }
  SUBCASE("zero matrix") {
    auto s = smith_normal_form(IMat(2, 2));
    CHECK(diag_of(s.d) == std::vector<Int>{0, 0});
  }
}

TEST_CASE("smith decomposition is exact and canonical on random matrices") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 60; ++trial) {
    int r = 1 + trial % 5, c = 1 + (trial / 3) % 5;
    IMat m = random_mat(rng, r, c);
    auto s = smith_normal_form(m);
    CHECK(s.u * m * s.v == s.d);
    CHECK(is_canonical_diag(s.d));
    CHECK(iabs(det(s.u)) == 1);
    CHECK(iabs(det(s.v)) == 1);

    // invariance under row/column permutations
    IMat p = m;
    if (r > 1) p.swap_rows(0, r - 1);
    if (c > 1) p.swap_cols(0, c - 1);
    CHECK(diag_of(smith_normal_form(p).d) == diag_of(s.d));
  }
}

TEST_CASE("discriminant groups") {
  CHECK(discriminant_group(ade_gram(ade(ADEFamily::A, 2))).invariant_factors == std::vector<Int>{3});
  CHECK(discriminant_group(ade_gram(ade(ADEFamily::E, 8))).trivial());
  GramLattice hyp(2, IMat(2, 2, {0, 1, 1, 0}));
  CHECK(discriminant_group(hyp).trivial());
  GramLattice degenerate(2, IMat(2, 2, {1, 1, 1, 1}));
  CHECK_THROWS_AS(discriminant_group(degenerate), DegenerateLattice);
}

TEST_CASE("quotient torsion is invariant under sublattice basis change") {
  std::mt19937 rng(7);
  GramLattice amb = ade_gram(ade(ADEFamily::E, 8));
  for (int trial = 0; trial < 20; ++trial) {
    IMat b = random_mat(rng, 8, 3, -3, 3);
    SublatticeEmbedding e(amb, b);
    // unimodular right factor: product of a few elementary column ops
    IMat m = b;
    for (int k = 0; k < 4; ++k) {
      int i = static_cast<int>(rng() % 3), j = static_cast<int>(rng() % 3);
      if (i == j) continue;
      for (int row = 0; row < 8; ++row) m(row, j) += Int(1 + rng() % 3) * m(row, i);
    }
    try {
      SublatticeEmbedding e2(amb, m);
      CHECK(quotient_torsion(e).invariant_factors == quotient_torsion(e2).invariant_factors);
    } catch (const std::invalid_argument&) {
      // dependent draw; skip
    }
  }
}

TEST_CASE("orthogonal complements") {
  GramLattice e8 = ade_gram(ade(ADEFamily::E, 8));
  SUBCASE("one root gives E7") {
    IMat b(8, 1);
    b(0, 0) = 1;  // a simple root
    SublatticeEmbedding e(e8, b);
    auto comp = orthogonal_complement(e);
    CHECK(comp.sub_rank() == 7);
    CHECK(is_primitive(comp));
    CHECK(discriminant_group(comp.induced()).invariant_factors == std::vector<Int>{2});
  }
  SUBCASE("full-rank sublattice has trivial complement") {
    SublatticeEmbedding e(e8, IMat::identity(8));
    CHECK(orthogonal_complement(e).sub_rank() == 0);
  }
  SUBCASE("complement of complement recovers the saturation") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 15; ++trial) {
      IMat b = random_mat(rng, 8, 2, -2, 2);
      try {
        SublatticeEmbedding e(e8, b);
        auto c1 = orthogonal_complement(e);
        auto c2 = orthogonal_complement(c1);
        auto sat = saturation(e);
        // same sublattice: mutual quotient torsion trivial and equal rank
        CHECK(c2.sub_rank() == sat.sub_rank());
        auto gram1 = c2.induced().gram;
        auto gram2 = sat.induced().gram;
        CHECK(torsion_invariants(gram1) == torsion_invariants(gram2));
      } catch (const std::invalid_argument&) {
      }
    }
  }
}

TEST_CASE("nikulin duality on random primitive sublattices of a unimodular lattice") {
  // |disc(S)| = |disc(S perp)| when the ambient is unimodular
  std::mt19937 rng(2718);
  IMat g(6, 6);
  g(0, 0) = 1;
  for (int i = 1; i < 6; ++i) g(i, i) = -1;
  GramLattice amb(6, g);
  int done = 0;
  for (int trial = 0; trial < 200 && done < 25; ++trial) {
    IMat b = random_mat(rng, 6, 2, -3, 3);
    try {
      SublatticeEmbedding raw(amb, b);
      auto s = saturation(raw);
      GramLattice sg = s.induced();
      if (det(sg.gram) == 0) continue;
      auto comp = orthogonal_complement(s);
      GramLattice cg = comp.induced();
      if (det(cg.gram) == 0) continue;
      CHECK(discriminant_group(sg).order() == discriminant_group(cg).order());
      ++done;
    } catch (const std::invalid_argument&) {
    }
  }
  CHECK(done >= 25);
}

TEST_CASE("signature, parity, characteristic vectors") {
  IMat g(10, 10);
  g(0, 0) = 1;
  for (int i = 1; i < 10; ++i) g(i, i) = -1;
  GramLattice l(10, g);
  CHECK(signature(l) == std::array<int, 3>{1, 9, 0});
  CHECK_FALSE(is_even(l));
  CHECK(is_even(ade_gram(ade(ADEFamily::E, 8))));

  std::vector<Int> f = {3, 1, 1, 1, 1, 1, 1, 1, 1, 1};
  CHECK(is_characteristic(l, f));

  // for diag(1,-1^9) a vector is characteristic iff all coordinates are odd
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Int> v(10);
    bool all_odd = true;
    for (auto& x : v) {
      x = Int(static_cast<int>(rng() % 9) - 4);
      if (x % 2 == 0) all_odd = false;
    }
    CHECK(is_characteristic(l, v) == all_odd);
  }

  GramLattice sum = direct_sum(ade_gram(ade(ADEFamily::A, 2)), ade_gram(ade(ADEFamily::A, 1)));
  CHECK(sum.rank == 3);
  CHECK(signature(sum) == std::array<int, 3>{0, 3, 0});
}

TEST_CASE("short vector enumeration matches root counts of small lattices") {
  CHECK(short_vectors(ade_gram(ade(ADEFamily::A, 2)), Int(-2)).size() == 6);
  CHECK(short_vectors(ade_gram(ade(ADEFamily::D, 4)), Int(-2)).size() == 24);
  CHECK(short_vectors(ade_gram(ade(ADEFamily::E, 6)), Int(-2)).size() == 72);
}
