#pragma once

#include <optional>
#include <variant>

#include "sextic/bivar.hpp"
#include "sextic/factor.hpp"
#include "sextic/rootspec.hpp"

namespace sextic {

struct DegenerateCurve : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// y^3 + a(x) y^2 + b(x) y + c(x), deg a <= 2, deg b <= 4, deg c <= 6,
// squarefree in y over Q(x).
struct TrigonalCurve {
  QPoly a, b, c;

  TrigonalCurve(QPoly a_, QPoly b_, QPoly c_);
  static TrigonalCurve from_equation(const QQ& f);       // monic cubic in y required
  static TrigonalCurve from_string(const std::string& s);
  QQ equation() const;
};

// y^3 + P(x) y + Q(x) after eliminating the y^2 term
struct ReducedModel {
  QPoly P, Q;

  ReducedModel(QPoly p, QPoly q);
  static ReducedModel from_curve(const TrigonalCurve& c) ;
  QQ equation() const;
  QPoly discriminant() const;  // -4P^3 - 27Q^2, not identically zero
};

ReducedModel reduce(const TrigonalCurve& c);

enum class FiberType { I0, In, II, III, IV, Instar, IVstar, IIIstar, IIstar, NonMinimal };

struct KodairaClass {
  FiberType type = FiberType::I0;
  int n = 0;  // index for In / In*
  std::string name() const;
  bool minimal() const { return type != FiberType::NonMinimal; }
};

// classification by vanishing orders in characteristic zero
KodairaClass classify_orders(int ord_p, int ord_q, int ord_d);
int euler_number(const KodairaClass& k, int ord_d);

// the singular point of the trigonal curve sitting on a fiber of this type
std::optional<ADESymbol> fiber_point_symbol(const KodairaClass& k);

struct FiberLocation {
  bool at_infinity = false;
  QPoly minpoly;  // monic irreducible, deg>=1 when finite
  int orbit_size() const { return at_infinity ? 1 : minpoly.deg(); }
  std::string text() const;
};

struct FiberReport {
  FiberLocation location;
  KodairaClass kodaira;
  int ord_p = 0, ord_q = 0, ord_d = 0;  // kInfiniteOrder when the series vanishes
  int euler = 0;                         // per point of the orbit
  int euler_total = 0;                   // euler * orbit size
};

std::vector<FiberReport> singular_fibers(const ReducedModel& m);
RootSystemSpec sigma_from_fibers(const ReducedModel& m);

// one fiber of the ruling: finite rational, finite Galois orbit, or infinity
struct FiberChoice {
  enum Kind { Rational, Orbit, Infinity } kind = Rational;
  Rat x;
  QPoly minpoly;
  static FiberChoice at(const Rat& x0) { return {Rational, x0, {}}; }
  static FiberChoice at_infinity() { return {Infinity, Rat(0), {}}; }
  static FiberChoice orbit(QPoly monic_irreducible) { return {Orbit, Rat(0), std::move(monic_irreducible)}; }
};

struct SexticSpec {
  RootSystemSpec sigma_b;              // all singularities of the trigonal model
  KodairaClass fiber;                  // type of the chosen fiber
  std::string distinguished;           // the J/E label of the point O
  RootSystemSpec remaining;            // simple singularities of the sextic
  std::vector<std::string> labels() const;
};

SexticSpec sextic_singularities(const ReducedModel& m, const FiberChoice& f0);

// plane curve data produced by the birational transforms
struct PlaneCurve {
  QQ f;          // affine equation, homogenize to the stated degree
  int degree;    // total degree after homogenization
};

// blow up a triple point of the curve on the fiber x = x0 and blow down;
// the result is the associated plane cubic
PlaneCurve associated_cubic(const TrigonalCurve& c, const Rat& x0);
// same for a double (not triple) point; the distinguished point of the quartic
// is (0:1:0) and the image line is {x = 0} after the built-in translation
PlaneCurve associated_quartic(const TrigonalCurve& c, const Rat& x0);

int local_intersection_index(const QQ& f, const QQ& g, const Rat& x0, const Rat& y0);
int local_intersection_index_kk(const KK& f, const KK& g);  // at the origin

}  // namespace sextic
