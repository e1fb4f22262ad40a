#include "sextic/localsing.hpp"

#include <algorithm>
#include <map>

namespace sextic {

namespace {

// ---- linear algebra over the field ----

int rank_over_field(std::vector<std::vector<NFElem>>& rows) {
  if (rows.empty()) return 0;
  size_t cols = rows[0].size();
  int rank = 0;
  size_t rr = 0;
  for (size_t c = 0; c < cols && rr < rows.size(); ++c) {
    size_t p = rr;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rr], rows[p]);
    NFElem inv = NFElem(1) / rows[rr][c];
    for (size_t j = c; j < cols; ++j) rows[rr][j] = rows[rr][j] * inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == rr || rows[i][c].is_zero()) continue;
      NFElem f = rows[i][c];
      for (size_t j = c; j < cols; ++j) rows[i][j] = rows[i][j] - f * rows[rr][j];
    }
    ++rr;
    ++rank;
  }
  return rank;
}

// ---- bivariate utilities over the field ----

KP kk_content(const KK& f) {
  KP g;
  for (const KP& c : f.c) g = gcd(g, c);
  return g;
}

KK kk_scale_down(const KK& f, const KP& d) {
  std::vector<KP> c;
  c.reserve(f.c.size());
  for (const KP& q : f.c) c.push_back(exact_div(q, d));
  return KK(std::move(c));
}

KK kk_primitive(const KK& f) {
  if (f.is_zero()) return f;
  return kk_scale_down(f, kk_content(f));
}

// pseudo-remainder of f by g in (K[x])[y]
KK kk_prem(KK f, const KK& g) {
  const KP& lg = g.lc();
  while (!f.is_zero() && f.deg() >= g.deg()) {
    int shift = f.deg() - g.deg();
    KP lf = f.lc();
    KK sub;
    sub.c.assign(shift + 1, KP(0));
    sub.c[shift] = lf;
    f = f * KK::constant(lg) - sub * g;
    f.normalize();
  }
  return f;
}

KK kk_gcd(KK f, KK g) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  KP cont = gcd(kk_content(f), kk_content(g));
  f = kk_primitive(f);
  g = kk_primitive(g);
  if (f.deg() < g.deg()) std::swap(f, g);
  while (!g.is_zero()) {
    KK r = kk_prem(f, g);
    f = g;
    g = r.is_zero() ? KK() : kk_primitive(r);
  }
  KK out = KK::constant(cont) * kk_primitive(f);
  // normalize so the top coefficient is monic
  if (!out.is_zero()) {
    NFElem inv = NFElem(1) / out.lc().lc();
    out = out * KP::constant(inv);
  }
  return out;
}

// substitute x -> x + lam*y
KK kk_shear(const KK& f, const Rat& lam) {
  KK xy(std::vector<KP>{KP::x(), KP::constant(NFElem(lam))});  // x + lam*y
  KK acc, pw = KK::constant(KP::constant(NFElem(1)));
  for (size_t j = 0; j < f.c.size(); ++j) {
    // c_j(x + lam y) * y^j
    KK cj;
    {
      KK a, p = KK::constant(KP::constant(NFElem(1)));
      for (size_t i = 0; i < f.c[j].c.size(); ++i) {
        a = a + p * KK::constant(KP::constant(f.c[j].c[i]));
        p = p * xy;
      }
      cj = a;
    }
    acc = acc + cj * pw;
    pw = pw * KK::x();
  }
  return acc;
}

KP kk_eval_y0(const KK& f) {  // f(x, 0)
  return f.coeff(0);
}

KP kk_eval_x0(const KK& f) {  // f(0, y) as a polynomial in y
  std::vector<NFElem> c;
  for (int j = 0; j <= f.deg(); ++j) c.push_back(f.coeff(j).coeff(0));
  return KP(std::move(c));
}

// resultant w.r.t. y of two bivariate polynomials
KP kk_resultant_y(const KK& f, const KK& g) { return ring_resultant<KP>(f, g); }

int order_in_x(const KP& p) {
  if (p.is_zero()) return kInfiniteOrder;
  for (int i = 0; i <= p.deg(); ++i)
    if (!p.coeff(i).is_zero()) return i;
  return kInfiniteOrder;
}

bool is_power_of_y(const KP& p) {  // nonzero scalar times y^k
  if (p.is_zero()) return false;
  for (int i = 0; i < p.deg(); ++i)
    if (!p.coeff(i).is_zero()) return false;
  return true;
}

}  // namespace

int local_dimension_at_origin(const KK& f, const KK& g) {
  // fast screen: a common factor through the origin means a non-isolated zero
  {
    KK h = kk_gcd(f, g);
    if (total_degree_kk(h) > 0 && kk_coeff_xy(h, 0, 0).is_zero())
      throw std::runtime_error("local_dimension_at_origin: common component through the origin");
  }
  const int cap = 26;
  int prev = -1;
  for (int d = 2; d <= cap; ++d) {
    // monomials u^i v^j, i+j < d
    std::map<std::pair<int, int>, int> col;
    int ncols = 0;
    for (int i = 0; i < d; ++i)
      for (int j = 0; i + j < d; ++j) col[{i, j}] = ncols++;
    std::vector<std::vector<NFElem>> rows;
    for (const KK* h : {&f, &g}) {
      for (int a = 0; a < d; ++a)
        for (int b = 0; a + b < d; ++b) {
          std::vector<NFElem> row(ncols, NFElem(0));
          bool any = false;
          for (int j = 0; j <= h->deg(); ++j) {
            const KP& cj = h->coeff(j);
            for (int i = 0; i <= cj.deg(); ++i) {
              if (cj.coeff(i).is_zero()) continue;
              int ii = i + a, jj = j + b;
              if (ii + jj >= d) continue;
              row[col[{ii, jj}]] = row[col[{ii, jj}]] + cj.coeff(i);
              any = true;
            }
          }
          if (any) rows.push_back(std::move(row));
        }
    }
    int rank = rank_over_field(rows);
    int dim = ncols - rank;
    if (dim == prev) return dim;
    prev = dim;
  }
  throw std::runtime_error("local_dimension_at_origin: no stabilization (non-isolated intersection?)");
}

int milnor_number(const KK& f) { return local_dimension_at_origin(kk_dx(f), kk_dy(f)); }

GermClass classify_germ_at_origin(const KK& f) {
  if (!kk_coeff_xy(f, 0, 0).is_zero() || !kk_coeff_xy(f, 1, 0).is_zero() || !kk_coeff_xy(f, 0, 1).is_zero())
    throw std::invalid_argument("classify_germ_at_origin: germ must be singular at the origin");
  GermClass out;
  NFElem c20 = kk_coeff_xy(f, 2, 0), c11 = kk_coeff_xy(f, 1, 1), c02 = kk_coeff_xy(f, 0, 2);
  // rank of the Hessian of the quadratic part
  int rank;
  if (c20.is_zero() && c02.is_zero() && c11.is_zero())
    rank = 0;
  else if ((NFElem(4) * c20 * c02 - c11 * c11).is_zero())
    rank = 1;
  else
    rank = 2;
  if (rank == 2) {
    out.simple = true;
    out.type = ade(ADEFamily::A, 1);
    out.milnor = 1;
    return out;
  }
  out.milnor = milnor_number(f);
  if (rank == 1) {
    out.simple = true;
    out.type = ade(ADEFamily::A, out.milnor);
    return out;
  }
  // corank 2: inspect the cubic part a v^3 + b v^2 u + c v u^2 + d u^3
  NFElem a = kk_coeff_xy(f, 0, 3), b = kk_coeff_xy(f, 1, 2), c = kk_coeff_xy(f, 2, 1), d = kk_coeff_xy(f, 3, 0);
  if (a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero()) {
    out.simple = false;
    out.nonsimple_label = "corank 2 with vanishing cubic part (milnor " + std::to_string(out.milnor) + ")";
    return out;
  }
  NFElem disc = NFElem(18) * a * b * c * d - NFElem(4) * b * b * b * d + b * b * c * c - NFElem(4) * a * c * c * c -
                NFElem(27) * a * a * d * d;
  if (!disc.is_zero()) {
    out.simple = true;
    out.type = ade(ADEFamily::D, 4);
    if (out.milnor != 4) throw std::logic_error("classify_germ: D4 with unexpected milnor number");
    return out;
  }
  // repeated factor: triple iff the Hessian covariant of the cubic vanishes
  NFElem h0 = NFElem(3) * b * d - c * c;          // u^2 part of (c3_uu c3_vv - c3_uv^2)/4
  NFElem h1 = NFElem(9) * a * d - b * c;          // uv
  NFElem h2 = NFElem(3) * a * c - b * b;          // v^2
  bool triple = h0.is_zero() && h1.is_zero() && h2.is_zero();
  if (triple) {
    if (out.milnor >= 6 && out.milnor <= 8) {
      out.simple = true;
      out.type = ade(ADEFamily::E, out.milnor);
    } else {
      out.simple = false;
      out.nonsimple_label = "corank 2 with a triple cubic factor (milnor " + std::to_string(out.milnor) +
                            (out.milnor >= 10 ? ", adjacent to J10)" : ")");
    }
    return out;
  }
  // exactly double factor
  if (out.milnor < 5) throw std::logic_error("classify_germ: double-factor cubic with milnor < 5");
  out.simple = true;
  out.type = ade(ADEFamily::D, out.milnor);
  return out;
}

namespace {

struct SingularFinder {
  const QPoly& P;
  const QPoly& Q;
  std::vector<SingularPointReport> out;

  // examine the fiber orbit of the monic irreducible pi (finite chart)
  void examine(const QPoly& pi, bool at_infinity, const QPoly& a_orig) {
    NF field = make_field(pi);
    NFElem alpha = NFElem::generator(field);
    NFElem pa = eval_nf(P, alpha), qa = eval_nf(Q, alpha);
    NFElem y0(0);
    if (!pa.is_zero()) {
      y0 = NFElem(Rat(-3)) * qa / (NFElem(2) * pa);
      NFElem fx = eval_nf(derivative(P), alpha) * y0 + eval_nf(derivative(Q), alpha);
      if (!fx.is_zero()) return;  // vertical tangency only (I1/II style fiber)
    } else {
      if (!qa.is_zero()) throw std::logic_error("singular finder: P=0, Q!=0 on a discriminant root");
      NFElem fx = eval_nf(derivative(Q), alpha);
      if (!fx.is_zero()) return;
    }
    // translate the reduced equation and classify
    KK eq = kk_lift(QQ(std::vector<QPoly>{Q, P, QPoly(), QPoly::constant(Rat(1))}));
    KK germ = kk_translate(eq, alpha, y0);
    GermClass g = classify_germ_at_origin(germ);
    SingularPointReport rep;
    rep.at_infinity = at_infinity;
    rep.xlocus = pi;
    rep.orbit_size = at_infinity ? 1 : pi.deg();
    rep.y0 = y0 - eval_nf(a_orig, alpha) / NFElem(3);
    rep.simple = g.simple;
    rep.type = g.type;
    rep.nonsimple_label = g.nonsimple_label;
    rep.milnor = g.milnor;
    if (g.simple) {
      rep.delta = g.type.delta();
      rep.branches = g.type.branches();
    }
    out.push_back(std::move(rep));
  }
};

}  // namespace

std::string SingularPointReport::location_text() const {
  if (at_infinity) return "inf";
  if (xlocus.deg() == 1) return to_string(Rat(-xlocus.coeff(0)));
  return to_string(xlocus, "x");
}

std::vector<SingularPointReport> classify_singular_points(const TrigonalCurve& c) {
  ReducedModel m = reduce(c);
  QPoly d = m.discriminant();
  SingularFinder finder{m.P, m.Q, {}};
  auto fac = factorize(d);
  for (const auto& [pi, mult] : fac.factors) {
    (void)mult;
    finder.examine(pi, false, c.a);
  }
  // the chart at infinity
  if (d.deg() < 12) {
    QPoly pinf = reversed(m.P, 4), qinf = reversed(m.Q, 6), ainf = reversed(c.a, 2);
    SingularFinder inf_finder{pinf, qinf, {}};
    inf_finder.examine(QPoly::x(), true, ainf);
    for (auto& r : inf_finder.out) finder.out.push_back(std::move(r));
  }
  return finder.out;
}

int genus(const TrigonalCurve& c) {
  int g = 4;
  for (const auto& rep : classify_singular_points(c)) {
    if (!rep.simple)
      throw NonSimplePoint("genus: non-simple singular point at x = " + rep.location_text() + " (" +
                           rep.nonsimple_label + "); the genus drop is at least 6");
    g -= rep.delta * rep.orbit_size;
  }
  return g;
}

int local_intersection_index_kk(const KK& f0, const KK& g0) {
  if (f0.is_zero() || g0.is_zero()) throw std::invalid_argument("local_intersection_index: zero input");
  KK f = f0, g = g0;
  if (!kk_coeff_xy(f, 0, 0).is_zero() || !kk_coeff_xy(g, 0, 0).is_zero()) return 0;
  KK h = kk_gcd(f, g);
  if (total_degree_kk(h) > 0) {
    if (kk_coeff_xy(h, 0, 0).is_zero())
      throw std::invalid_argument("local_intersection_index: common component through the point");
    KK q;
    if (!ring_exact_div(f, h, q)) throw std::logic_error("gcd division failed");
    f = q;
    if (!ring_exact_div(g, h, q)) throw std::logic_error("gcd division failed");
    g = q;
  }
  for (int lam = 0; lam < 64; ++lam) {
    KK fs = lam == 0 ? f : kk_shear(f, Rat(lam));
    KK gs = lam == 0 ? g : kk_shear(g, Rat(lam));
    // leading y-coefficients must be nonzero constants
    if (fs.lc().deg() != 0 || gs.lc().deg() != 0) continue;
    // the only common zero on the line x=0 may be the origin
    KP f0y = kk_eval_x0(fs), g0y = kk_eval_x0(gs);
    if (f0y.is_zero() || g0y.is_zero()) continue;
    KP gy = gcd(f0y, g0y);
    if (gy.deg() > 0 && !is_power_of_y(gy)) continue;
    KP res = kk_resultant_y(fs, gs);
    if (res.is_zero()) throw std::logic_error("local_intersection_index: vanishing resultant after gcd strip");
    return order_in_x(res);
  }
  throw std::runtime_error("local_intersection_index: no admissible shear found");
}

int local_intersection_index(const QQ& f, const QQ& g, const Rat& x0, const Rat& y0) {
  QQ ft = qq_translate(f, x0, y0);
  QQ gt = qq_translate(g, x0, y0);
  return local_intersection_index_kk(kk_lift(ft), kk_lift(gt));
}

}  // namespace sextic
