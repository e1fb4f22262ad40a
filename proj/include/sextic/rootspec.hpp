#pragma once

#include <compare>
#include <string>
#include <vector>

#include "sextic/lattice.hpp"

namespace sextic {

enum class ADEFamily : uint8_t { A, D, E };

struct ADESymbol {
  ADEFamily family;
  int index;  // A_p p>=1, D_q q>=4, E_r r in {6,7,8}

  int rank() const { return index; }
  int milnor() const { return index; }
  // branch count of the corresponding curve singularity
  int branches() const;
  // delta invariant (mu + r - 1)/2
  int delta() const;
  std::string name() const;
  auto operator<=>(const ADESymbol&) const = default;
};

ADESymbol ade(ADEFamily f, int index);

// Multiset of ADE symbols, canonically sorted.
struct RootSystemSpec {
  std::vector<ADESymbol> summands;  // kept sorted

  RootSystemSpec() = default;
  explicit RootSystemSpec(std::vector<ADESymbol> s);
  int total_rank() const;
  bool empty() const { return summands.empty(); }
  std::string name() const;  // e.g. "3A2+A1"
  bool operator==(const RootSystemSpec& o) const { return summands == o.summands; }
  bool operator<(const RootSystemSpec& o) const { return summands < o.summands; }
};

// Parses "A5+A2+A1", "3A2+A1", "2A4", "E6+A2", "" (empty spec).
RootSystemSpec parse_spec(const std::string& s);

// Negative definite Gram matrix (Cartan matrix negated) of one summand.
GramLattice ade_gram(const ADESymbol& s);
GramLattice spec_gram(const RootSystemSpec& s);

// Dynkin diagram edges (i,j), 0-based within the summand.
std::vector<std::pair<int, int>> ade_edges(const ADESymbol& s);

// All specs with total rank <= max_rank (A_p<=8, D_q 4..8, E_6..8), sorted.
std::vector<RootSystemSpec> all_specs_up_to_rank(int max_rank);

}  // namespace sextic
