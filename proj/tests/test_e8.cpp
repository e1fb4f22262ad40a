#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "sextic/e8.hpp"

using namespace sextic;

TEST_CASE("the 240 roots of E8") {
  const auto& rs = e8_roots();
  CHECK(rs.size() == 240);
  std::set<Root> set(rs.begin(), rs.end());
  CHECK(set.size() == 240);
  for (const auto& r : rs) {
    CHECK(root_pairing(r, r) == -2);
    Root neg;
    for (int i = 0; i < 8; ++i) neg[i] = -r[i];
    CHECK(set.count(neg) == 1);
  }
  for (const auto& a : rs)
    for (const auto& b : rs) {
      int p = root_pairing(a, b);
      CHECK(p >= -2);
      CHECK(p <= 2);
    }
}

TEST_CASE("fixed basis spans E8") {
  const GramLattice& g = e8_lattice();
  CHECK(g.rank == 8);
  CHECK(is_even(g));
  CHECK(iabs(det(g.gram)) == 1);
  CHECK(signature(g) == std::array<int, 3>{0, 8, 0});
  for (const auto& r : e8_roots()) CHECK_NOTHROW(basis_coordinates(r));
}

TEST_CASE("embedding search on pinned specs") {
  SUBCASE("2A4 embeds") {
    auto w = find_embedding(parse_spec("2A4"));
    REQUIRE(w.has_value());
    CHECK(w->valid());
    CHECK(quotient_torsion(w->embedding()).invariant_factors == std::vector<Int>{5});
  }
  SUBCASE("non-embeddable lattices of the prohibition list") {
    CHECK_FALSE(find_embedding(parse_spec("A3+2A2")).has_value());
    CHECK_FALSE(find_embedding(parse_spec("A4+2A2")).has_value());
    CHECK_FALSE(find_embedding(parse_spec("A6+A2")).has_value());
  }
  SUBCASE("8A1 embeds, with the explicit orthogonal octet as oracle") {
    // (e1+-e2), (e3+-e4), (e5+-e6), (e7+-e8) are eight mutually orthogonal roots
    std::vector<Root> octet;
    for (int i = 0; i < 8; i += 2)
      for (int s : {2, -2}) {
        Root r{};
        r[i] = 2;
        r[i + 1] = s;
        octet.push_back(r);
      }
    for (size_t i = 0; i < 8; ++i)
      for (size_t j = i + 1; j < 8; ++j) CHECK(root_pairing(octet[i], octet[j]) == 0);
    auto w = find_embedding(parse_spec("8A1"));
    REQUIRE(w.has_value());
    CHECK(w->valid());
  }
  SUBCASE("4A2 torsion") {
    auto w = find_embedding(parse_spec("4A2"));
    REQUIRE(w.has_value());
    CHECK(quotient_torsion(w->embedding()).invariant_factors == std::vector<Int>{3, 3});
  }
  SUBCASE("single root") {
    auto w = find_embedding(parse_spec("A1"));
    REQUIRE(w.has_value());
    CHECK(quotient_torsion(w->embedding()).trivial());
  }
}

TEST_CASE("isometry classes of the lemma rows are unique") {
  CHECK(all_embeddings_up_to_isometry(parse_spec("2A4")).size() == 1);
  CHECK(all_embeddings_up_to_isometry(parse_spec("4A2")).size() == 1);
  CHECK(all_embeddings_up_to_isometry(RootSystemSpec{}).size() == 1);
  CHECK(all_embeddings_up_to_isometry(parse_spec("A8")).size() == 1);
}

TEST_CASE("direct witness equivalence agrees with the orbit classification") {
  auto reps = all_embeddings_up_to_isometry(parse_spec("3A2"));
  REQUIRE(reps.size() == 1);
  auto w = find_embedding(parse_spec("3A2"));
  REQUIRE(w.has_value());
  CHECK(witnesses_equivalent(reps[0], *w));
  CHECK(witnesses_equivalent(*w, *w));
}

TEST_CASE("index-squared formula on witnesses") {
  // |disc(saturation)| * |torsion|^2 = |disc(spec lattice)|
  for (const char* name : {"4A2", "2A4", "A8", "E6+A2", "3A2", "A5+A2+A1"}) {
    auto w = find_embedding(parse_spec(name));
    REQUIRE(w.has_value());
    auto emb = w->embedding();
    auto sat = saturation(emb);
    Int ds = iabs(det(sat.induced().gram));
    Int dl = iabs(det(emb.induced().gram));
    Int t = quotient_torsion(emb).order();
    CHECK(ds * t * t == dl);
  }
}

TEST_CASE("dihedral quotient counts") {
  CHECK(dihedral_quotient_count(parse_spec("4A2"), 3) == 4);
  CHECK(dihedral_quotient_count(parse_spec("2A4"), 5) == 1);
  CHECK(dihedral_quotient_count(parse_spec("A8"), 3) == 1);
  CHECK(dihedral_quotient_count(parse_spec("2A4"), 3) == 0);
  CHECK_THROWS_AS(dihedral_quotient_count(parse_spec("4A2"), 6), std::invalid_argument);
  CHECK_THROWS_AS(dihedral_quotient_count(parse_spec("A4+2A2"), 3), std::invalid_argument);
}

TEST_CASE("rank 10 lemma certificates") {
  auto rep = verify_lemma_e8();
  CHECK(rep.t_unimodular);
  CHECK(rep.t_signature == std::array<int, 3>{1, 1, 0});
  CHECK(rep.f_characteristic);
  CHECK(rep.complement_rank == 8);
  CHECK(rep.complement_even);
  CHECK(rep.complement_unimodular);
  CHECK(rep.complement_signature == std::array<int, 3>{0, 8, 0});
  CHECK(rep.complement_root_count == 240);
  CHECK(rep.all_ok());
}

TEST_CASE("spec parsing and naming") {
  CHECK(parse_spec("3A2+A1").name() == "3A2+A1");
  CHECK(parse_spec("A2+A2+A2+A1").name() == "3A2+A1");
  CHECK(parse_spec("E6+A2").total_rank() == 8);
  CHECK(parse_spec("0").empty());
  CHECK_THROWS(parse_spec("B3"));
  CHECK(all_specs_up_to_rank(2).size() == 3);  // A1, 2A1, A2
}
