#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sextic/mat.hpp"

namespace sextic {

// U*M*V = D with U, V unimodular and D diagonal, d1 | d2 | ..., zeros last,
// diagonal entries nonnegative.
struct SmithDecomposition {
  IMat u, d, v;
};

SmithDecomposition smith_normal_form(const IMat& m);

// Invariant factors >= 2 of the torsion part of coker(m), in divisibility order.
std::vector<Int> torsion_invariants(const IMat& m);

Int det(const IMat& m);

// Z-kernel of m as columns of a saturated (primitive) basis matrix.
IMat integer_kernel(const IMat& m);

// Symmetric integer bilinear form.
struct GramLattice {
  int rank = 0;
  IMat gram;

  GramLattice() = default;
  GramLattice(int r, IMat g);
};

// Columns of `basis` are coordinates of sublattice generators in the ambient basis.
struct SublatticeEmbedding {
  GramLattice ambient;
  IMat basis;

  SublatticeEmbedding(GramLattice a, IMat b);
  int sub_rank() const { return basis.cols(); }
  GramLattice induced() const;
};

struct TorsionGroup {
  std::vector<Int> invariant_factors;  // d1 | d2 | ..., each >= 2; empty = trivial
  bool trivial() const { return invariant_factors.empty(); }
  Int order() const;
  bool operator==(const TorsionGroup& o) const { return invariant_factors == o.invariant_factors; }
};

struct DegenerateLattice : std::runtime_error {
  using std::runtime_error::runtime_error;
};

TorsionGroup discriminant_group(const GramLattice& l);
TorsionGroup quotient_torsion(const SublatticeEmbedding& e);
SublatticeEmbedding orthogonal_complement(const SublatticeEmbedding& e);
bool is_primitive(const SublatticeEmbedding& e);
bool is_even(const GramLattice& l);
std::array<int, 3> signature(const GramLattice& l);  // (positive, negative, null)
GramLattice direct_sum(const GramLattice& a, const GramLattice& b);
bool is_characteristic(const GramLattice& l, const std::vector<Int>& v);

// Saturation of the image of e inside the ambient lattice.
SublatticeEmbedding saturation(const SublatticeEmbedding& e);

// All vectors of given (negative) square in a negative definite lattice,
// one per +/- pair when half is set.
std::vector<std::vector<Int>> short_vectors(const GramLattice& l, const Int& square, bool half = false);

}  // namespace sextic
