#include "sextic/trigonal.hpp"

#include <algorithm>

namespace sextic {

namespace {

QPoly qc(int v) { return QPoly::constant(Rat(v)); }

}  // namespace

TrigonalCurve::TrigonalCurve(QPoly a_, QPoly b_, QPoly c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
  if (a.deg() > 2 || b.deg() > 4 || c.deg() > 6)
    throw std::invalid_argument("TrigonalCurve: degree bounds are deg a<=2, deg b<=4, deg c<=6");
  ReducedModel::from_curve(*this);  // rejects equations that are not squarefree in y
}

QQ TrigonalCurve::equation() const { return QQ(std::vector<QPoly>{c, b, a, qc(1)}); }

TrigonalCurve TrigonalCurve::from_equation(const QQ& f) {
  if (f.deg() != 3) throw std::invalid_argument("TrigonalCurve: cubic in y required");
  if (f.coeff(3).deg() != 0) throw std::invalid_argument("TrigonalCurve: leading y coefficient must be constant");
  Rat lead = f.coeff(3).coeff(0);
  Rat inv = Rat(1) / lead;
  return TrigonalCurve(f.coeff(2) * inv, f.coeff(1) * inv, f.coeff(0) * inv);
}

TrigonalCurve TrigonalCurve::from_string(const std::string& s) { return from_equation(qq_from_string(s)); }

ReducedModel::ReducedModel(QPoly p, QPoly q) : P(std::move(p)), Q(std::move(q)) {
  if (P.deg() > 4 || Q.deg() > 6) throw std::invalid_argument("ReducedModel: degree bounds are deg P<=4, deg Q<=6");
  if (discriminant().is_zero()) throw DegenerateCurve("ReducedModel: discriminant vanishes identically");
}

ReducedModel ReducedModel::from_curve(const TrigonalCurve& c) {
  const QPoly& a = c.a;
  QPoly p = c.b - a * a * Rat(1, 3);
  QPoly q = (a * a * a * Rat(2) - a * c.b * Rat(9) + c.c * Rat(27)) * Rat(1, 27);
  return ReducedModel(std::move(p), std::move(q));
}

QQ ReducedModel::equation() const { return QQ(std::vector<QPoly>{Q, P, QPoly(), qc(1)}); }

QPoly ReducedModel::discriminant() const { return P * P * P * Rat(-4) - Q * Q * Rat(27); }

ReducedModel reduce(const TrigonalCurve& c) {
  ReducedModel m = ReducedModel::from_curve(c);
  if (m.discriminant().is_zero()) throw DegenerateCurve("reduce: discriminant vanishes identically");
  return m;
}

std::string KodairaClass::name() const {
  switch (type) {
    case FiberType::I0:
      return "I0";
    case FiberType::In:
      return "I" + std::to_string(n);
    case FiberType::II:
      return "II";
    case FiberType::III:
      return "III";
    case FiberType::IV:
      return "IV";
    case FiberType::Instar:
      return "I" + std::to_string(n) + "*";
    case FiberType::IVstar:
      return "IV*";
    case FiberType::IIIstar:
      return "III*";
    case FiberType::IIstar:
      return "II*";
    case FiberType::NonMinimal:
      return "NonMinimal";
  }
  return "?";
}

KodairaClass classify_orders(int ord_p, int ord_q, int ord_d) {
  auto expect = [&](bool cond, const char* what) {
    if (!cond) throw std::logic_error(std::string("classify_orders: impossible order triple for ") + what);
  };
  if (ord_d == 0) return {FiberType::I0, 0};
  if (ord_p == 0) {
    expect(ord_q == 0, "In");
    return {FiberType::In, ord_d};
  }
  if (ord_q == 1) {
    expect(ord_d == 2, "II");
    return {FiberType::II, 0};
  }
  if (ord_p == 1) {
    expect(ord_d == 3, "III");
    return {FiberType::III, 0};
  }
  if (ord_q == 2) {
    expect(ord_d == 4, "IV");
    return {FiberType::IV, 0};
  }
  if (ord_p >= 4 && ord_q >= 6) return {FiberType::NonMinimal, 0};
  if (ord_p == 2 && ord_q == 3) {
    expect(ord_d >= 6, "In*");
    return {FiberType::Instar, ord_d - 6};
  }
  if (ord_q == 3 || (ord_p == 2 && ord_q >= 4)) {
    expect(ord_d == 6, "I0*");
    return {FiberType::Instar, 0};
  }
  if (ord_q == 4) {
    expect(ord_d == 8, "IV*");
    return {FiberType::IVstar, 0};
  }
  if (ord_p == 3) {
    expect(ord_d == 9, "III*");
    return {FiberType::IIIstar, 0};
  }
  expect(ord_q == 5, "II*");
  expect(ord_d == 10, "II*");
  return {FiberType::IIstar, 0};
}

int euler_number(const KodairaClass& k, int ord_d) {
  (void)k;
  return ord_d;  // equals ord of the discriminant for every type in char 0
}

std::optional<ADESymbol> fiber_point_symbol(const KodairaClass& k) {
  switch (k.type) {
    case FiberType::In:
      if (k.n >= 2) return ade(ADEFamily::A, k.n - 1);
      return std::nullopt;
    case FiberType::III:
      return ade(ADEFamily::A, 1);
    case FiberType::IV:
      return ade(ADEFamily::A, 2);
    case FiberType::Instar:
      return ade(ADEFamily::D, k.n + 4);
    case FiberType::IVstar:
      return ade(ADEFamily::E, 6);
    case FiberType::IIIstar:
      return ade(ADEFamily::E, 7);
    case FiberType::IIstar:
      return ade(ADEFamily::E, 8);
    default:
      return std::nullopt;
  }
}

std::string FiberLocation::text() const {
  if (at_infinity) return "inf";
  if (minpoly.deg() == 1) return to_string(Rat(-minpoly.coeff(0)));
  return to_string(minpoly, "x");
}

std::vector<FiberReport> singular_fibers(const ReducedModel& m) {
  QPoly d = m.discriminant();
  if (d.is_zero()) throw DegenerateCurve("singular_fibers: discriminant vanishes identically");
  std::vector<FiberReport> out;
  auto fac = factorize(d);
  for (const auto& [pi, mult] : fac.factors) {
    FiberReport r;
    r.location = FiberLocation{false, pi};
    r.ord_d = mult;
    r.ord_p = order_at(m.P, pi);
    r.ord_q = order_at(m.Q, pi);
    r.kodaira = classify_orders(r.ord_p, r.ord_q, r.ord_d);
    r.euler = euler_number(r.kodaira, r.ord_d);
    r.euler_total = r.euler * r.location.orbit_size();
    out.push_back(std::move(r));
  }
  // fiber at infinity via x -> 1/x with weights (P,Q,D) = (4,6,12)
  int odd_inf = 12 - d.deg();
  if (odd_inf > 0) {
    FiberReport r;
    r.location = FiberLocation{true, QPoly()};
    r.ord_d = odd_inf;
    r.ord_p = m.P.is_zero() ? kInfiniteOrder : 4 - m.P.deg();
    r.ord_q = m.Q.is_zero() ? kInfiniteOrder : 6 - m.Q.deg();
    r.kodaira = classify_orders(r.ord_p, r.ord_q, r.ord_d);
    r.euler = euler_number(r.kodaira, r.ord_d);
    r.euler_total = r.euler;
    out.push_back(std::move(r));
  }
  return out;
}

RootSystemSpec sigma_from_fibers(const ReducedModel& m) {
  std::vector<ADESymbol> syms;
  for (const auto& r : singular_fibers(m)) {
    if (!r.kodaira.minimal())
      throw DegenerateCurve("sigma_from_fibers: non-minimal fiber (non-simple point of the curve) at x = " +
                            r.location.text());
    auto s = fiber_point_symbol(r.kodaira);
    if (!s) continue;
    for (int i = 0; i < r.location.orbit_size(); ++i) syms.push_back(*s);
  }
  return RootSystemSpec(std::move(syms));
}

namespace {

std::string table1_label(const KodairaClass& k) {
  switch (k.type) {
    case FiberType::I0:
      return "J2,0";
    case FiberType::In:
      return k.n == 1 ? "J2,1" : "J2," + std::to_string(k.n);
    case FiberType::II:
      return "E12";
    case FiberType::III:
      return "E13";
    case FiberType::IV:
      return "E14";
    case FiberType::Instar:
      return "J3," + std::to_string(k.n);
    case FiberType::IVstar:
      return "E18";
    case FiberType::IIIstar:
      return "E19";
    case FiberType::IIstar:
      return "E20";
    case FiberType::NonMinimal:
      break;
  }
  throw DegenerateCurve("table1_label: non-minimal fiber has no J/E label");
}

}  // namespace

std::vector<std::string> SexticSpec::labels() const {
  std::vector<std::string> out{distinguished};
  for (const auto& s : remaining.summands) out.push_back(s.name());
  return out;
}

SexticSpec sextic_singularities(const ReducedModel& m, const FiberChoice& f0) {
  auto fibers = singular_fibers(m);
  for (const auto& r : fibers)
    if (!r.kodaira.minimal())
      throw DegenerateCurve("sextic_singularities: non-minimal fiber present at x = " + r.location.text());
  RootSystemSpec sigma_b = sigma_from_fibers(m);

  const FiberReport* chosen = nullptr;
  for (const auto& r : fibers) {
    switch (f0.kind) {
      case FiberChoice::Rational:
        if (!r.location.at_infinity && r.location.minpoly.deg() == 1 && r.location.minpoly.eval(f0.x) == 0)
          chosen = &r;
        break;
      case FiberChoice::Orbit:
        if (!r.location.at_infinity && r.location.minpoly == f0.minpoly) chosen = &r;
        break;
      case FiberChoice::Infinity:
        if (r.location.at_infinity) chosen = &r;
        break;
    }
    if (chosen) break;
  }

  SexticSpec out;
  out.sigma_b = sigma_b;
  if (!chosen) {
    if (f0.kind == FiberChoice::Orbit)
      throw std::invalid_argument("sextic_singularities: orbit choice must name a singular fiber");
    // a smooth fiber of the ruling; transversality holds since the
    // discriminant does not vanish there
    out.fiber = KodairaClass{FiberType::I0, 0};
    out.distinguished = table1_label(out.fiber);
    out.remaining = sigma_b;
    return out;
  }
  out.fiber = chosen->kodaira;
  out.distinguished = table1_label(chosen->kodaira);
  std::vector<ADESymbol> rest = sigma_b.summands;
  if (auto consumed = fiber_point_symbol(chosen->kodaira)) {
    auto it = std::find(rest.begin(), rest.end(), *consumed);
    if (it == rest.end()) throw std::logic_error("sextic_singularities: fiber symbol missing from sigma");
    rest.erase(it);
  }
  out.remaining = RootSystemSpec(std::move(rest));
  return out;
}

PlaneCurve associated_cubic(const TrigonalCurve& c, const Rat& x0) {
  // move the fiber to x = 0; the triple point forces y0 = -a(0)/3
  QPoly a = shifted(c.a, x0), b = shifted(c.b, x0), cc = shifted(c.c, x0);
  Rat y0 = -a.eval(Rat(0)) / 3;
  QQ f = qq_translate(TrigonalCurve(a, b, cc).equation(), Rat(0), y0);
  // triple point at the origin: ord a' >= 1, b' >= 2, c' >= 3
  QPoly a2 = f.coeff(2), b2 = f.coeff(1), c2 = f.coeff(0);
  auto ord0 = [](const QPoly& p) { return order_at(p, QPoly::x()); };
  if (ord0(a2) < 1 || ord0(b2) < 2 || ord0(c2) < 3)
    throw std::invalid_argument("associated_cubic: no triple point of the curve on this fiber");
  // G(x, y') = F(x, x y') / x^3
  QPoly x = QPoly::x();
  std::vector<QPoly> g{exact_div(c2, x * x * x), exact_div(b2, x * x), exact_div(a2, x), qc(1)};
  QQ gq(std::move(g));
  if (total_degree(gq) > 3) throw std::logic_error("associated_cubic: degree bound violated");
  return PlaneCurve{gq, 3};
}

PlaneCurve associated_quartic(const TrigonalCurve& c, const Rat& x0) {
  QPoly a = shifted(c.a, x0), b = shifted(c.b, x0), cc = shifted(c.c, x0);
  // double root of the fiber cubic at x = 0
  Rat a0 = a.eval(Rat(0)), b0 = b.eval(Rat(0)), c0 = cc.eval(Rat(0));
  // y^3 + a0 y^2 + b0 y + c0 with a double root y0 (and simple root elsewhere)
  QPoly fiber(std::vector<Rat>{c0, b0, a0, Rat(1)});
  QPoly dfib = derivative(fiber);
  QPoly g = gcd(fiber, dfib);
  if (g.deg() != 1)
    throw std::invalid_argument("associated_quartic: fiber does not carry a double (non-triple) point");
  Rat y0 = -g.coeff(0) / g.coeff(1);
  QQ f = qq_translate(TrigonalCurve(a, b, cc).equation(), Rat(0), y0);
  QPoly a2 = f.coeff(2), b2 = f.coeff(1), c2 = f.coeff(0);
  auto ord0 = [](const QPoly& p) { return order_at(p, QPoly::x()); };
  if (ord0(b2) < 1 || ord0(c2) < 2)
    throw std::invalid_argument("associated_quartic: the curve is not singular at this fiber point");
  if (ord0(a2) >= 1 && ord0(b2) >= 2 && ord0(c2) >= 3)
    throw std::invalid_argument("associated_quartic: triple point; use associated_cubic");
  QPoly x = QPoly::x();
  // G(x, y') = F(x, x y') / x^2 = x y'^3 + a y'^2 + (b/x) y' + c/x^2
  std::vector<QPoly> g4{exact_div(c2, x * x), exact_div(b2, x), a2, x};
  QQ gq(std::move(g4));
  if (total_degree(gq) > 4) throw std::logic_error("associated_quartic: degree bound violated");
  return PlaneCurve{gq, 4};
}

}  // namespace sextic
