#pragma once

#include <memory>

#include "sextic/poly.hpp"

namespace sextic {

// Simple extension Q[t]/(minpoly), minpoly monic irreducible.
struct NumberField {
  QPoly minpoly;
  int degree() const { return minpoly.deg(); }
};

using NF = std::shared_ptr<const NumberField>;

NF make_field(QPoly monic_irreducible);

// Element of Q or of a simple extension; field == nullptr means a plain rational.
class NFElem {
 public:
  NFElem() : rep_() {}
  NFElem(int v) : rep_(QPoly::constant(Rat(v))) {}  // NOLINT(google-explicit-constructor)
  NFElem(const Rat& v) : rep_(QPoly::constant(v)) {}  // NOLINT(google-explicit-constructor)
  NFElem(NF field, QPoly rep);

  static NFElem generator(const NF& field);

  const NF& field() const { return field_; }
  const QPoly& rep() const { return rep_; }
  bool is_rational() const { return field_ == nullptr || rep_.deg() <= 0; }
  Rat rational() const;  // requires is_rational()
  bool is_zero() const { return rep_.is_zero(); }

  NFElem operator-() const;
  NFElem operator+(const NFElem& o) const;
  NFElem operator-(const NFElem& o) const;
  NFElem operator*(const NFElem& o) const;
  NFElem operator/(const NFElem& o) const;
  bool operator==(const NFElem& o) const;
  bool operator!=(const NFElem& o) const { return !(*this == o); }

 private:
  NF field_;
  QPoly rep_;  // reduced mod minpoly when field_ set

  static NF join(const NFElem& a, const NFElem& b);
};

using KPoly = Poly<NFElem>;

// lift rational polynomial into K[x]
KPoly lift(const QPoly& p);
KPoly lift(const QPoly& p, const NF& field);
// evaluate a rational polynomial at a field element
NFElem eval_nf(const QPoly& p, const NFElem& at);

std::string to_string(const NFElem& e);

}  // namespace sextic
