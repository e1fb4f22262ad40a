#include "sextic/torus.hpp"

#include <algorithm>

#include "sextic/e8.hpp"

namespace sextic {

namespace {

// deterministic total order on field elements (by coefficient vectors)
bool nf_less(const NFElem& a, const NFElem& b) {
  const QPoly &x = a.rep(), &y = b.rep();
  if (x.deg() != y.deg()) return x.deg() < y.deg();
  for (int i = x.deg(); i >= 0; --i)
    if (x.coeff(i) != y.coeff(i)) return x.coeff(i) < y.coeff(i);
  return false;
}

bool kp_less(const KP& a, const KP& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg();
  for (int i = a.deg(); i >= 0; --i) {
    if (a.coeff(i) != b.coeff(i)) return nf_less(a.coeff(i), b.coeff(i));
  }
  return false;
}

// fix the sign ambiguity (l,e) ~ (-l,-e) deterministically
void normalize_sign(TorusStructure& s) {
  KP nl = -s.l, ne = -s.e;
  if (kp_less(nl, s.l) || (nl == s.l && kp_less(ne, s.e))) {
    s.l = nl;
    s.e = ne;
  }
}

std::string structure_sort_key(const TorusStructure& s) {
  std::string k = s.field ? to_string(s.field->minpoly, "t") : "";
  for (const KP* p : {&s.b, &s.l, &s.e}) {
    k += "|";
    for (int i = 0; i <= p->deg(); ++i) k += to_string(p->coeff(i)) + ",";
  }
  return k;
}

KP kp_of(const QPoly& p) { return kp_lift(p); }

// e = (3P - l^4) / (6 l), exact
KP torus_e_from_l(const KP& pk, const KP& l) {
  KP num = kp_of(QPoly()) + pk * NFElem(3) - l * l * l * l;
  auto [q, r] = divmod(num, l * NFElem(6));
  if (!r.is_zero()) throw std::logic_error("torus: e-division not exact");
  return q;
}

// master identity l^8 + 18 P l^4 + 108 Q l^2 - 27 P^2 for a given l over a field
KP master_identity(const KP& pk, const KP& qk, const KP& l) {
  KP l2 = l * l, l4 = l2 * l2;
  return l4 * l4 + pk * l4 * NFElem(18) + qk * l2 * NFElem(108) - pk * pk * NFElem(27);
}

// x-coefficients of l^8 + 18P l^4 + 108Q l^2 - 27P^2 with l = s*base + s0... here
// l = s * base where base is 1 or (x - t0); returns polynomials in s over the field
std::vector<KP> coefficient_polys_in_s(const KP& pk, const KP& qk, const KP& base) {
  // compute the three power contributions as polynomials in x whose
  // coefficients we then transpose into polynomials in s
  KP b2 = base * base, b4 = b2 * b2, b8 = b4 * b4;
  KP t8 = b8;                      // s^8 coefficient (in x)
  KP t4 = pk * b4 * NFElem(18);    // s^4
  KP t2 = qk * b2 * NFElem(108);   // s^2
  KP t0 = -(pk * pk) * NFElem(27);  // s^0
  int xdeg = std::max(std::max(t8.deg(), t4.deg()), std::max(t2.deg(), t0.deg()));
  std::vector<KP> out;
  for (int i = 0; i <= xdeg; ++i) {
    std::vector<NFElem> cs(9, NFElem(0));
    cs[8] = t8.coeff(i);
    cs[4] = t4.coeff(i);
    cs[2] = t2.coeff(i);
    cs[0] = t0.coeff(i);
    KP ci(std::move(cs));
    if (!ci.is_zero()) out.push_back(std::move(ci));
  }
  return out;
}

KP gcd_of_all(const std::vector<KP>& polys) {
  KP g;
  for (const KP& p : polys) g = gcd(g, p);
  return g;
}

int strip_s_factor(KP& g) {
  int n = 0;
  while (!g.is_zero() && g.coeff(0).is_zero()) {
    std::vector<NFElem> c(g.c.begin() + 1, g.c.end());
    g = KP(std::move(c));
    ++n;
  }
  return n;
}

QPoly qpoly_of(const KP& p) {  // requires rational coefficients
  std::vector<Rat> c;
  for (int i = 0; i <= p.deg(); ++i) c.push_back(p.coeff(i).rational());
  return QPoly(std::move(c));
}

// monic mirror factor pi(-s) up to sign
QPoly mirror_factor(const QPoly& pi) {
  std::vector<Rat> c = pi.c;
  for (size_t i = 0; i + 1 <= c.size(); ++i)
    if (i % 2 == 1) c[i] = -c[i];
  QPoly m(std::move(c));
  if (m.deg() % 2 != 0 || m.lc() < 0) {
    // keep monic
    if (m.lc() < 0)
      for (auto& v : m.c) v = -v;
  }
  return to_monic(m);
}

bool qpoly_less(const QPoly& a, const QPoly& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg();
  for (int i = a.deg(); i >= 0; --i)
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  return false;
}

}  // namespace

TorusStructure TorusStructure::rational(const QPoly& b, const QPoly& l, const QPoly& e) {
  TorusStructure s;
  s.b = kp_of(b);
  s.l = kp_of(l);
  s.e = kp_of(e);
  return s;
}

std::string TorusStructure::field_text() const {
  if (!field) return "Q";
  return "Q[t]/(" + to_string(field->minpoly, "t") + ")";
}

TrigonalCurve compose_torus(const QPoly& b, const QPoly& l, const QPoly& e) {
  if (b.deg() > 2 || l.deg() > 1 || e.deg() > 3)
    throw std::invalid_argument("compose_torus: degree bounds are deg b<=2, deg l<=1, deg e<=3");
  QPoly a = b * Rat(3) + l * l;
  QPoly bc = b * b * Rat(3) + l * e * Rat(2);
  QPoly cc = b * b * b + e * e;
  return TrigonalCurve(a, bc, cc);
}

namespace {

bool verify_torus_kk(const KK& eq, const TorusStructure& s) {
  if (s.b.deg() > 2 || s.l.deg() > 1 || s.e.deg() > 3)
    throw std::invalid_argument("verify_torus: degree bounds are deg b<=2, deg l<=1, deg e<=3");
  KK p(std::vector<KP>{s.b, KP(1)});
  KK q(std::vector<KP>{s.e, s.l});
  KK lhs = p * p * p + q * q;
  return lhs == eq;
}

}  // namespace

bool verify_torus(const ReducedModel& m, const TorusStructure& s) {
  return verify_torus_kk(kk_lift(m.equation()), s);
}

bool verify_torus(const TrigonalCurve& c, const TorusStructure& s) {
  return verify_torus_kk(kk_lift(c.equation()), s);
}

int InnerOuterSplit::inner_total() const {
  int n = 0;
  for (const auto& p : points) n += p.inner;
  return n;
}

int InnerOuterSplit::outer_total() const {
  int n = 0;
  for (const auto& p : points) n += p.orbit_size - p.inner;
  return n;
}

InnerOuterSplit inner_outer_split(const ReducedModel& m, const TorusStructure& s) {
  if (!verify_torus(m, s)) throw std::invalid_argument("inner_outer_split: structure does not verify");
  InnerOuterSplit out;
  TrigonalCurve curve(QPoly(), m.P, m.Q);
  // h = e - l b vanishes at the x-coordinates of {p=0} n {q=0}
  KP h = s.e - s.l * s.b;
  for (const auto& pt : classify_singular_points(curve)) {
    InnerOuterSplit::Entry entry;
    entry.at_infinity = pt.at_infinity;
    entry.xlocus = pt.xlocus;
    entry.orbit_size = pt.orbit_size;
    entry.type = pt.type;
    if (!pt.at_infinity) {
      // inner iff h(alpha) = 0 and y0(alpha) = -b(alpha); intersect the loci
      // y0 as a rational polynomial representative modulo xlocus
      NF kf = make_field(pt.xlocus);
      NFElem alpha = NFElem::generator(kf);
      // y0 of the reduced model: -3Q/(2P) (or 0 at a triple root)
      NFElem pa = eval_nf(m.P, alpha);
      QPoly y0pol;
      if (!pa.is_zero()) {
        // invert 2P modulo xlocus over Q
        QPoly s1, t1;
        QPoly g = ext_gcd(m.P * Rat(2), pt.xlocus, s1, t1);
        if (g.deg() != 0) throw std::logic_error("inner_outer_split: fiber locus divides 2P");
        y0pol = divmod(m.Q * Rat(-3) * s1 * (Rat(1) / g.coeff(0)), pt.xlocus).second;
      }
      KP cond = s.b + kp_of(y0pol);
      KP g1 = gcd(kp_of(pt.xlocus), h);
      KP g2 = gcd(g1, cond);
      entry.inner = std::max(0, g2.deg());
    } else {
      // chart at infinity: p -> w + t^2 b(1/t), q -> t l(1/t) w + t^3 e(1/t)
      // inner at t=0 requires the t=0 coefficients to match the singular point
      // (only relevant when the structure has rational coefficients in the chart)
      // The infinity point is inner iff h_inf(0) = 0 and w0 = -b_inf(0), with
      // b_inf = t^2 b(1/t), e_inf = t^3 e(1/t), l_inf = t l(1/t).
      KP binf = reversed(s.b, 2), einf = reversed(s.e, 3), linf = reversed(s.l, 1);
      KP hinf = einf - linf * binf;
      bool hzero = hinf.coeff(0).is_zero();
      // w0 at infinity of the reduced model
      QPoly pinf = reversed(m.P, 4), qinf = reversed(m.Q, 6);
      NFElem p0(pinf.coeff(0)), q0(qinf.coeff(0));
      NFElem w0 = p0.is_zero() ? NFElem(0) : NFElem(Rat(-3)) * q0 / (NFElem(2) * p0);
      bool ymatch = (w0 + binf.coeff(0)).is_zero();
      entry.inner = (hzero && ymatch) ? 1 : 0;
    }
    out.points.push_back(std::move(entry));
  }
  return out;
}

namespace {

struct Collector {
  std::vector<TorusStructure> structures;
  int count = 0;

  void emit(TorusStructure s, int weight) {
    normalize_sign(s);
    structures.push_back(std::move(s));
    count += weight;
  }
};

// factors of g over Q paired under s -> -s; calls emit_fn(factor, weight,
// self_paired) once per pair
void for_each_factor_pair(const QPoly& g, const std::function<void(const QPoly&, int)>& emit_fn) {
  auto fac = factorize(g);
  std::vector<QPoly> factors;
  for (const auto& [pi, mult] : fac.factors) factors.push_back(pi);  // squarefree input: mult 1
  std::vector<bool> used(factors.size(), false);
  for (size_t i = 0; i < factors.size(); ++i) {
    if (used[i]) continue;
    QPoly mir = mirror_factor(factors[i]);
    if (mir == factors[i]) {
      used[i] = true;
      if (factors[i].deg() % 2 != 0) throw std::logic_error("torus: odd self-mirrored factor");
      emit_fn(factors[i], factors[i].deg() / 2);
      continue;
    }
    size_t j = i + 1;
    for (; j < factors.size(); ++j)
      if (!used[j] && factors[j] == mir) break;
    if (j == factors.size()) throw std::logic_error("torus: unpaired factor under s -> -s");
    used[i] = used[j] = true;
    const QPoly& rep = qpoly_less(factors[i], mir) ? factors[i] : mir;
    emit_fn(rep, factors[i].deg());
  }
}

// structures with l = s * base, base rational (1 or x - t0); g = squarefree
// part of the solution polynomial for s over Q
void emit_rational_base(Collector& col, const ReducedModel& m, const QPoly& base, const QPoly& g) {
  for_each_factor_pair(g, [&](const QPoly& pi, int weight) {
    if (pi.deg() == 1) {
      Rat s0 = -pi.coeff(0);
      TorusStructure t;
      t.l = kp_of(base * s0);
      t.b = -(t.l * t.l) * NFElem(Rat(1, 3));
      t.e = torus_e_from_l(kp_of(m.P), t.l);
      col.emit(std::move(t), weight);
    } else {
      NF kf = make_field(pi);
      NFElem s0 = NFElem::generator(kf);
      TorusStructure t;
      t.field = kf;
      t.l = kp_of(base) * s0;
      t.b = -(t.l * t.l) * NFElem(Rat(1, 3));
      t.e = torus_e_from_l(kp_of(m.P), t.l);
      col.emit(std::move(t), weight);
    }
  });
}

// linear branch over an irrational fiber t0 (root of pi_t | P):
// solutions (t0, s) listed through a primitive element theta = s + c*t0
void emit_irrational_base(Collector& col, const ReducedModel& m, const QPoly& pi_t) {
  NF kt = make_field(pi_t);
  NFElem t0 = NFElem::generator(kt);
  KP base(std::vector<NFElem>{-t0, NFElem(1)});  // x - t0
  auto coeffs = coefficient_polys_in_s(kp_lift(m.P), kp_lift(m.Q), base);
  KP g = gcd_of_all(coeffs);
  strip_s_factor(g);
  if (g.deg() <= 0) return;
  g = squarefree_part(g);
  // write g as G(s, t) over Q: outer s, inner t
  Poly<QPoly> gst;
  {
    std::vector<QPoly> cs;
    for (int i = 0; i <= g.deg(); ++i) cs.push_back(g.coeff(i).rep());
    gst = Poly<QPoly>(std::move(cs));
  }
  // try small c until the resultant in t is squarefree
  for (int c = 1; c < 64; ++c) {
    // B(t) = G(theta - c t, t): polynomial in t with coefficients in Q[theta]
    // build as Poly<QPoly> outer t, inner theta
    // substitute s = theta - c t into gst
    // gst = sum_k G_k(t) s^k; result = sum_k G_k(t) (theta - c t)^k
    Poly<QPoly> bt;  // outer t, inner theta
    {
      // (theta - c t)^k as Poly in t with QPoly(theta) coefficients
      Poly<QPoly> lin(std::vector<QPoly>{QPoly::x(), QPoly::constant(Rat(-c))});
      Poly<QPoly> pw = Poly<QPoly>(1);
      for (int k = 0; k <= gst.deg(); ++k) {
        // G_k(t) has rational coefficients: lift to inner-theta constants
        QPoly gk = gst.coeff(k);
        Poly<QPoly> gk_t;
        {
          std::vector<QPoly> cc;
          for (int i = 0; i <= gk.deg(); ++i) cc.push_back(QPoly::constant(gk.coeff(i)));
          gk_t = Poly<QPoly>(std::move(cc));
        }
        bt = bt + gk_t * pw;
        pw = pw * lin;
      }
    }
    Poly<QPoly> pt_lift;
    {
      std::vector<QPoly> cc;
      for (int i = 0; i <= pi_t.deg(); ++i) cc.push_back(QPoly::constant(pi_t.coeff(i)));
      pt_lift = Poly<QPoly>(std::move(cc));
    }
    QPoly mres = ring_resultant<QPoly>(pt_lift, bt);
    if (mres.is_zero()) continue;
    if (gcd(mres, derivative(mres)).deg() != 0) continue;
    // good primitive element; factor and recover per-component data
    auto fac = factorize(mres);
    std::vector<QPoly> comps;
    for (const auto& [mi, mult] : fac.factors) comps.push_back(mi);
    std::vector<bool> used(comps.size(), false);
    for (size_t i = 0; i < comps.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      NF li = make_field(comps[i]);
      NFElem theta = NFElem::generator(li);
      // t0 in L_i: linear gcd of pi_t(t) and G(theta - c t, t) over L_i
      KP pt_l = kp_lift(pi_t);
      KP bt_l;
      {
        // evaluate bt's inner theta at the generator
        std::vector<NFElem> cc;
        for (int k = 0; k <= bt.deg(); ++k) cc.push_back(eval_nf(bt.coeff(k), theta));
        bt_l = KP(std::move(cc));
      }
      KP gl = gcd(pt_l, bt_l);
      if (gl.deg() != 1) throw std::logic_error("torus: primitive element recovery failed");
      NFElem t0l = -gl.coeff(0) / gl.coeff(1);
      NFElem s0l = theta - NFElem(c) * t0l;
      if (s0l.is_zero()) continue;  // the stripped s = 0 root resurfacing; skip
      // locate the mirror component (-s0 + c t0)
      NFElem mirror = -s0l + NFElem(c) * t0l;
      int weight = comps[i].deg();
      if (eval_nf(comps[i], mirror).is_zero()) {
        weight = comps[i].deg() / 2;  // self-paired
      } else {
        for (size_t j = i + 1; j < comps.size(); ++j)
          if (!used[j] && eval_nf(comps[j], mirror).is_zero()) {
            used[j] = true;
            break;
          }
      }
      TorusStructure t;
      t.field = li;
      t.l = KP(std::vector<NFElem>{-s0l * t0l, s0l});  // s0 (x - t0)
      t.b = -(t.l * t.l) * NFElem(Rat(1, 3));
      t.e = torus_e_from_l(kp_lift(m.P), t.l);
      col.emit(std::move(t), weight);
    }
    return;
  }
  throw std::runtime_error("torus: no squarefree primitive element found");
}

}  // namespace

DetectionReport detect_torus(const ReducedModel& m) {
  DetectionReport rep;
  rep.diagnostics.push_back("irreducibility of the curve was not verified; reducible models are analyzed as-is");
  Collector col;

  // branch l = 0: requires P = 0 and Q a square
  if (m.P.is_zero()) {
    auto sq = squarefree_decomposition(m.Q);
    bool even = true;
    QPoly root = QPoly::constant(Rat(1));
    for (const auto& [f, mult] : sq) {
      if (mult % 2 != 0) {
        even = false;
        break;
      }
      root = root * pow(f, mult / 2);
    }
    if (even) {
      Rat lead = m.Q.lc();  // Q = lead * root^2
      Rat sq_lead = 0;
      bool is_square = false;
      if (lead > 0) {
        Int n = num(lead), dn = den(lead);
        Int rn = boost::multiprecision::sqrt(n), rd = boost::multiprecision::sqrt(dn);
        if (rn * rn == n && rd * rd == dn) {
          is_square = true;
          sq_lead = Rat(rn, rd);
        }
      }
      TorusStructure t;
      if (is_square) {
        t = TorusStructure::rational(QPoly(), QPoly(), root * sq_lead);
      } else {
        // field Q[s]/(s^2 - lead)
        QPoly mp(std::vector<Rat>{-lead, Rat(0), Rat(1)});
        NF kf = make_field(mp);
        t.field = kf;
        t.e = kp_of(root) * NFElem::generator(kf);
      }
      col.emit(std::move(t), 1);
    }
  }

  // branch l = s (constant)
  {
    auto coeffs = coefficient_polys_in_s(kp_lift(m.P), kp_lift(m.Q), KP(1));
    KP g = gcd_of_all(coeffs);
    strip_s_factor(g);
    if (g.deg() > 0) {
      g = squarefree_part(g);
      emit_rational_base(col, m, QPoly::constant(Rat(1)), qpoly_of(g));
    }
  }

  // branch l = s (x - t0)
  if (!m.P.is_zero()) {
    auto fac = factorize(m.P);
    for (const auto& [pi, mult] : fac.factors) {
      (void)mult;
      if (pi.deg() == 1) {
        Rat t0 = -pi.coeff(0);
        QPoly base = pi;  // x - t0
        NF none;
        auto coeffs = coefficient_polys_in_s(kp_lift(m.P), kp_lift(m.Q), kp_of(base));
        KP g = gcd_of_all(coeffs);
        strip_s_factor(g);
        if (g.deg() > 0) {
          g = squarefree_part(g);
          emit_rational_base(col, m, base, qpoly_of(g));
        }
      } else {
        emit_irrational_base(col, m, pi);
      }
    }
  } else {
    // P = 0: l = s(x - t0) forces Q = -l^6/108, so Q = q6 (x - t0)^6
    auto sq = squarefree_decomposition(m.Q);
    if (sq.size() == 1 && sq[0].second == 6 && sq[0].first.deg() == 1) {
      Rat q6 = m.Q.lc();
      // s^6 = -108 q6
      QPoly spoly(std::vector<Rat>{q6 * 108, Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)});
      emit_rational_base(col, m, sq[0].first, spoly);
    }
  }

  // canonical order and verification
  for (const auto& s : col.structures)
    if (!verify_torus(m, s)) throw std::logic_error("detect_torus: emitted structure fails verification");
  std::sort(col.structures.begin(), col.structures.end(),
            [](const TorusStructure& a, const TorusStructure& b) { return structure_sort_key(a) < structure_sort_key(b); });
  rep.structures = std::move(col.structures);
  rep.count_over_closure = col.count;
  return rep;
}

int expected_torus_count(const RootSystemSpec& spec) { return dihedral_quotient_count(spec, Int(3)); }

namespace {

// every monomial x^i y^j lies on or above the Newton segment (a,0)-(0,b):
// i/a + j/b >= 1
bool newton_above(const QQ& f, int a, int b) {
  for (int j = 0; j <= f.deg(); ++j) {
    const QPoly& cj = f.coeff(j);
    for (int i = 0; i <= cj.deg(); ++i) {
      if (cj.coeff(i) == 0) continue;
      if (i * b + j * a < a * b) return false;
    }
  }
  return true;
}

Rat coeff_xy(const QQ& f, int i, int j) { return f.coeff(j).coeff(i); }

}  // namespace

NewtonCheckReport newton_divisibility_check(const NewtonCheckInstance& inst) {
  NewtonCheckReport rep;
  auto fail = [&](const std::string& why) {
    rep.hypotheses_ok = false;
    rep.reason = why;
    return rep;
  };
  const bool e6 = inst.family == ADEFamily::E;
  if (e6 && inst.k != 6) return fail("E-family instance must be E6");
  if (!e6 && inst.k < 1) return fail("A-family instance needs k >= 1");
  if (inst.power != 1 && inst.power != 2) return fail("power must be 1 or 2");

  const int k = inst.k;
  // p semiquasihomogeneous of type (k,1) (E6: (2,1))
  int pk = e6 ? 2 : k;
  if (!newton_above(inst.p, pk, 1)) return fail("p is not adjacent to type (k,1)");
  if (coeff_xy(inst.p, 0, 1) == 0) return fail("p must have a nonzero y term");
  if (coeff_xy(inst.p, pk, 0) == 0) return fail("p must have a nonzero x^k corner");
  // q adjacency
  if (e6) {
    if (!newton_above(inst.q, 2, 2)) return fail("q is not adjacent to type (2,2)");
  } else if (inst.weak_q) {
    if (!newton_above(inst.q, 1, 1)) return fail("q is not adjacent to type (1,1)");
  } else {
    int mq = (3 * k + 1) / 2;
    if (!newton_above(inst.q, mq, 1)) return fail("q is not adjacent to the required type");
  }
  // phi = q^2 + p^power h must carry the stated singularity at the origin
  QQ phi = inst.q * inst.q + pow(inst.p, inst.power) * inst.h;
  if (coeff_xy(phi, 0, 0) != 0 || coeff_xy(phi, 1, 0) != 0 || coeff_xy(phi, 0, 1) != 0)
    return fail("phi is not singular at the origin");
  GermClass g;
  try {
    g = classify_germ_at_origin(kk_lift(phi));
  } catch (const std::exception&) {
    return fail("phi does not have an isolated singularity at the origin");
  }
  if (e6) {
    if (!g.simple || g.type != ade(ADEFamily::E, 6)) return fail("phi is not an E6 germ");
  } else {
    if (!g.simple || g.type != ade(ADEFamily::A, 3 * k - 1)) return fail("phi is not an A_{3k-1} germ");
  }
  rep.hypotheses_ok = true;
  rep.index = local_intersection_index_kk(kk_lift(inst.h), kk_lift(inst.p));
  if (e6)
    rep.bound = inst.power == 1 ? Rat(3) : Rat(2);
  else if (inst.weak_q)
    rep.bound = Rat(1);
  else
    rep.bound = inst.power == 1 ? Rat(3 * k + 1, 2) : Rat(k);
  rep.satisfied = Rat(rep.index) >= rep.bound;
  return rep;
}

}  // namespace sextic
