#pragma once

#include <optional>

#include "sextic/words.hpp"

namespace sextic {

// Finite group as a verified multiplication table with distinguished generators.
class FiniteGroup {
 public:
  FiniteGroup(std::string name, int order, std::vector<int> table, std::vector<int> generators);

  int order() const { return n_; }
  int mul(int a, int b) const { return table_[static_cast<size_t>(a) * n_ + b]; }
  int identity() const { return id_; }
  int inverse(int a) const { return inv_[a]; }
  int element_order(int a) const;
  const std::vector<int>& generators() const { return gens_; }
  const std::string& name() const { return name_; }
  void rename(std::string s) { name_ = std::move(s); }

  bool is_abelian() const;
  int center_order() const;
  std::vector<int> element_order_profile() const;     // sorted orders of all elements
  std::vector<Int> abelianization_invariants() const;  // of G/[G,G]
  int subgroup_order(const std::vector<int>& elems) const;  // closure size

 private:
  int n_;
  std::vector<int> table_;
  int id_ = 0;
  std::vector<int> inv_;
  std::vector<int> gens_;
  std::string name_;
};

FiniteGroup trivial_group();
FiniteGroup cyclic(int n);
// dihedral group indexed by its order (D6 = S3, D10 of order 10)
FiniteGroup dihedral(int order);
FiniteGroup symmetric3();
FiniteGroup symmetric4();
FiniteGroup alternating4();
FiniteGroup sl23();
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
// <a, b | a^n = 1, b^2 = a^t, b a b^-1 = a^s>
FiniteGroup metacyclic2(int n, int s, int t, const std::string& name);
// Z/m x| Z/k with the generator of Z/k acting by the unit `action` mod m
FiniteGroup semidirect_cyclic(int m, int k, int action);
// quotient by the central cyclic subgroup generated by z
FiniteGroup central_quotient(const FiniteGroup& g, int z, const std::string& name);
FiniteGroup from_permutations(int degree, const std::vector<std::vector<int>>& gens, const std::string& name);

bool is_isomorphic_small(const FiniteGroup& a, const FiniteGroup& b);

// every group of order <= max_order (max 24), one per isomorphism class.
// catalogue version: 1 (constructions listed in the implementation)
const std::vector<FiniteGroup>& group_catalogue(int max_order = 24);

// ---- homomorphism enumeration ----

struct Hom {
  std::vector<int> images;  // generator images in G
};

std::vector<Hom> enumerate_homs(const Presentation& p, const FiniteGroup& g);
std::vector<Hom> enumerate_homs_serial(const Presentation& p, const FiniteGroup& g);
bool epimorphism_exists(const Presentation& p, const FiniteGroup& g);
long hom_count(const Presentation& p, const FiniteGroup& g);
bool image_is_abelian(const Presentation& p, const FiniteGroup& g, const Hom& h);

// counts over the catalogue of groups up to the bound (default 24)
std::map<std::string, long> hom_count_spectrum(const Presentation& p, int order_bound = 24);

}  // namespace sextic
