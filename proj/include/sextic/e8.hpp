#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sextic/rootspec.hpp"

namespace sextic {

// Roots live in the even coordinate model of E8, doubled so that all
// coordinates are integers: r represents r/2, so r is either (+-2,+-2,0,...)
// up to order or (+-1)^8 with an even number of minus signs. The form is
// negative definite: <r,s> = -(sum r_i s_i)/4, every root has square -2.
using Root = std::array<int, 8>;

const std::vector<Root>& e8_roots();                 // 240 roots, canonical order
int root_index(const Root& r);                       // index in e8_roots()
int root_pairing(const Root& a, const Root& b);      // <a,b> in the negative convention
Root reflect(const Root& v, const Root& mirror);     // s_m(v) = v + <v,m> m

// Simple roots used as the fixed basis of E8 for lattice coordinates.
const std::array<Root, 8>& e8_basis();
const GramLattice& e8_lattice();  // Gram of e8_basis(), negative definite

// coordinates of v in the e8_basis (exact; throws if v not in the lattice)
std::vector<Int> basis_coordinates(const Root& v);

struct EmbeddingWitness {
  RootSystemSpec spec;
  std::vector<Root> roots;  // one per simple root, summand by summand
  SublatticeEmbedding embedding() const;  // basis coordinates in e8_lattice
  bool valid() const;                     // Gram invariants hold exactly
};

std::optional<EmbeddingWitness> find_embedding(const RootSystemSpec& spec);

struct SearchBudget : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One representative per Aut(E8)-orbit of image sublattices.
std::vector<EmbeddingWitness> all_embeddings_up_to_isometry(const RootSystemSpec& spec);

// Direct partial-map extension test between two witnesses: searches an
// ambient isometry mapping the first image onto the second. Node budget
// (env SEXTIC_SEARCH_BUDGET or argument) makes exhaustion explicit.
bool witnesses_equivalent(const EmbeddingWitness& a, const EmbeddingWitness& b, long budget = 2000000);

struct ClassificationRow {
  RootSystemSpec spec;
  TorsionGroup torsion;
  int classes_up_to_isometry = 0;
};

std::vector<ClassificationRow> classify_odd_torsion();
std::vector<ClassificationRow> classify_by_predicate(const std::function<bool(const TorsionGroup&)>& pred);

// Serial reference for the classification scan (parallel version is the default).
std::vector<ClassificationRow> classify_by_predicate_serial(const std::function<bool(const TorsionGroup&)>& pred);

int dihedral_quotient_count(const RootSystemSpec& spec, const Int& n);

struct LemmaE8Report {
  bool t_unimodular = false;
  std::array<int, 3> t_signature{};
  bool f_characteristic = false;
  int complement_rank = 0;
  bool complement_even = false;
  bool complement_unimodular = false;
  std::array<int, 3> complement_signature{};
  int complement_root_count = 0;
  bool all_ok() const;
};

LemmaE8Report verify_lemma_e8();

}  // namespace sextic
