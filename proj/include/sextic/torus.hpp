#pragma once

#include "sextic/localsing.hpp"
#include "sextic/trigonal.hpp"

namespace sextic {

// F = (y + b)^3 + (l y + e)^2 with deg b <= 2, deg l <= 1, deg e <= 3,
// coefficients rational or in a simple extension of Q.
struct TorusStructure {
  NF field;  // nullptr = rational coefficients
  KP b, l, e;

  static TorusStructure rational(const QPoly& b, const QPoly& l, const QPoly& e);
  std::string field_text() const;
};

// compose a rational structure into the curve it defines
TrigonalCurve compose_torus(const QPoly& b, const QPoly& l, const QPoly& e);

bool verify_torus(const ReducedModel& m, const TorusStructure& s);
bool verify_torus(const TrigonalCurve& c, const TorusStructure& s);

struct InnerOuterSplit {
  // one entry per singular point orbit of the curve
  struct Entry {
    bool at_infinity = false;
    QPoly xlocus;
    int orbit_size = 1;
    int inner = 0;  // how many points of the orbit lie on {p=0} n {q=0}
    ADESymbol type{ADEFamily::A, 1};
  };
  std::vector<Entry> points;
  int inner_total() const;
  int outer_total() const;
};

InnerOuterSplit inner_outer_split(const ReducedModel& m, const TorusStructure& s);

struct DetectionReport {
  std::vector<TorusStructure> structures;  // one per conjugate pair-orbit, canonical order
  int count_over_closure = 0;
  std::vector<std::string> diagnostics;
};

DetectionReport detect_torus(const ReducedModel& m);

// number of Z/3 subgroups of the 3-torsion of E8 / spec
int expected_torus_count(const RootSystemSpec& spec);

// property check instances for the Newton-polygon divisibility lemmas
struct NewtonCheckInstance {
  // germ type A_{3k-1} (family == A, k >= 1) or E6
  ADEFamily family = ADEFamily::A;
  int k = 1;         // A_{3k-1} index parameter; ignored for E6
  QQ p, q, h;        // germs at the origin
  int power = 1;     // 1: phi - q^2 = p h1, 2: phi - q^2 = p^2 h2
  bool weak_q = false;  // the A2 variant where q is only of type (1,1)
};

struct NewtonCheckReport {
  bool hypotheses_ok = false;
  std::string reason;
  int index = -1;        // (h . p) at the origin
  Rat bound;             // the lemma's lower bound
  bool satisfied = false;
};

NewtonCheckReport newton_divisibility_check(const NewtonCheckInstance& inst);

}  // namespace sextic
