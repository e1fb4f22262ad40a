#pragma once

#include "sextic/trigonal.hpp"

namespace sextic {

struct SingularPointReport {
  bool at_infinity = false;
  QPoly xlocus;      // monic irreducible in x (trivial when at infinity)
  int orbit_size = 1;
  NFElem y0;         // y-coordinate over Q[x]/xlocus, in the original coordinates
  bool simple = true;
  ADESymbol type{ADEFamily::A, 1};  // valid when simple
  std::string nonsimple_label;      // set when !simple
  int milnor = 0;
  int delta = 0;     // valid when simple
  int branches = 0;  // valid when simple
  std::string location_text() const;
};

struct NonSimplePoint : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<SingularPointReport> classify_singular_points(const TrigonalCurve& c);

// 4 - sum of delta invariants; rejects curves with a non-simple point
int genus(const TrigonalCurve& c);

// classification of an isolated plane curve germ at the origin over a field
struct GermClass {
  bool simple = true;
  ADESymbol type{ADEFamily::A, 1};
  std::string nonsimple_label;
  int milnor = 0;
};

GermClass classify_germ_at_origin(const KK& f);

// Milnor number of f at the origin (dimension of the local Jacobian algebra)
int milnor_number(const KK& f);

// local intersection multiplicity at the origin via the stabilized dimension of
// K[[u,v]] / (f, g) (the independent cross-check route)
int local_dimension_at_origin(const KK& f, const KK& g);

}  // namespace sextic
