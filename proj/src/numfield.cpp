#include "sextic/numfield.hpp"

namespace sextic {

NF make_field(QPoly monic_irreducible) {
  if (monic_irreducible.deg() < 1 || !(monic_irreducible.lc() == Rat(1)))
    throw std::invalid_argument("make_field: monic polynomial of degree >= 1 required");
  return std::make_shared<NumberField>(NumberField{std::move(monic_irreducible)});
}

NFElem::NFElem(NF field, QPoly rep) : field_(std::move(field)), rep_(std::move(rep)) {
  if (field_) rep_ = divmod(rep_, field_->minpoly).second;
  if (rep_.deg() <= 0) field_ = nullptr;
}

NFElem NFElem::generator(const NF& field) { return NFElem(field, QPoly::x()); }

Rat NFElem::rational() const {
  if (!is_rational()) throw std::domain_error("NFElem: not rational");
  return rep_.is_zero() ? Rat(0) : rep_.c[0];
}

NF NFElem::join(const NFElem& a, const NFElem& b) {
  if (!a.field_) return b.field_;
  if (!b.field_) return a.field_;
  if (a.field_ == b.field_ || a.field_->minpoly == b.field_->minpoly) return a.field_;
  throw std::domain_error("NFElem: elements of different fields");
}

NFElem NFElem::operator-() const {
  NFElem r = *this;
  r.rep_ = -r.rep_;
  return r;
}

NFElem NFElem::operator+(const NFElem& o) const { return NFElem(join(*this, o), rep_ + o.rep_); }
NFElem NFElem::operator-(const NFElem& o) const { return NFElem(join(*this, o), rep_ - o.rep_); }
NFElem NFElem::operator*(const NFElem& o) const { return NFElem(join(*this, o), rep_ * o.rep_); }

NFElem NFElem::operator/(const NFElem& o) const {
  if (o.is_zero()) throw std::domain_error("NFElem: division by zero");
  NF f = join(*this, o);
  if (!f || o.rep_.deg() <= 0) {
    QPoly r = rep_;
    Rat inv = Rat(1) / o.rep_.c[0];
    for (auto& c : r.c) c *= inv;
    return NFElem(f, std::move(r));
  }
  QPoly s, t;
  QPoly g = ext_gcd(o.rep_, f->minpoly, s, t);
  if (g.deg() != 0) throw std::domain_error("NFElem: non-invertible element (minpoly not irreducible?)");
  // s * o = 1 mod minpoly
  return NFElem(f, rep_ * s);
}

bool NFElem::operator==(const NFElem& o) const {
  if (field_ && o.field_ && field_ != o.field_ && !(field_->minpoly == o.field_->minpoly)) return false;
  return rep_ == o.rep_;
}

KPoly lift(const QPoly& p) {
  std::vector<NFElem> c;
  c.reserve(p.c.size());
  for (const Rat& q : p.c) c.emplace_back(q);
  return KPoly(std::move(c));
}

KPoly lift(const QPoly& p, const NF& field) {
  KPoly out = lift(p);
  (void)field;
  return out;
}

NFElem eval_nf(const QPoly& p, const NFElem& at) {
  NFElem acc(0);
  for (size_t i = p.c.size(); i-- > 0;) acc = acc * at + NFElem(p.c[i]);
  return acc;
}

std::string to_string(const NFElem& e) {
  if (e.is_rational()) return to_string(e.rational());
  return to_string(e.rep(), "t");
}

}  // namespace sextic
