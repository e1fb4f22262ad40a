#include "sextic/factor.hpp"

#include <algorithm>
#include <random>

namespace sextic {

namespace {

Int powmod(Int b, Int e, const Int& m) {
  Int r = 1;
  b %= m;
  if (b < 0) b += m;
  while (e > 0) {
    if (e % 2 != 0) r = r * b % m;
    b = b * b % m;
    e /= 2;
  }
  return r;
}

}  // namespace

bool is_probable_prime(const Int& n) {
  if (n < 2) return false;
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  Int d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  // deterministic for n < 3.3e24; ample retries beyond
  for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    Int x = powmod(Int(a), d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = x * x % n;
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Int next_prime_above(Int n) {
  if (n < 2) return 2;
  ++n;
  if (n % 2 == 0) ++n;
  while (!is_probable_prime(n)) n += 2;
  return n;
}

std::pair<Rat, std::vector<Int>> primitive_z(const QPoly& f) {
  if (f.is_zero()) return {Rat(0), {}};
  Int l = 1;
  for (const Rat& q : f.c) l = lcm(l, den(q));
  std::vector<Int> z;
  Int g = 0;
  for (const Rat& q : f.c) {
    Int v = num(q) * (l / den(q));
    z.push_back(v);
    g = gcd(g, v);
  }
  if (z.back() < 0) g = -g;
  for (Int& v : z) v /= g;
  return {Rat(g, l), z};
}

namespace {

// dense polynomials over F_p with Int coefficients in [0, p)
using PPoly = std::vector<Int>;

void pnorm(PPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmul(const PPoly& a, const PPoly& b, const Int& p) {
  if (a.empty() || b.empty()) return {};
  PPoly r(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  pnorm(r);
  return r;
}

Int pinv(const Int& a, const Int& p) { return powmod(a, p - 2, p); }

// remainder of a by b
PPoly pmod(PPoly a, const PPoly& b, const Int& p) {
  Int binv = pinv(b.back(), p);
  while (a.size() >= b.size()) {
    Int f = a.back() * binv % p;
    size_t off = a.size() - b.size();
    if (f != 0)
      for (size_t i = 0; i < b.size(); ++i) a[off + i] = ((a[off + i] - f * b[i]) % p + p) % p;
    a.pop_back();
    pnorm(a);
    if (a.size() < b.size()) break;
  }
  pnorm(a);
  return a;
}

PPoly pgcd(PPoly a, PPoly b, const Int& p) {
  while (!b.empty()) {
    PPoly r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Int inv = pinv(a.back(), p);
    for (Int& c : a) c = c * inv % p;
  }
  return a;
}

PPoly ppowmod(PPoly base, Int e, const PPoly& mod, const Int& p) {
  PPoly r{Int(1)};
  base = pmod(std::move(base), mod, p);
  while (e > 0) {
    if (e % 2 != 0) r = pmod(pmul(r, base, p), mod, p);
    base = pmod(pmul(base, base, p), mod, p);
    e /= 2;
  }
  return r;
}

PPoly psub(PPoly a, const PPoly& b, const Int& p) {
  if (a.size() < b.size()) a.resize(b.size(), Int(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % p + p) % p;
  pnorm(a);
  return a;
}

PPoly pdivexact(const PPoly& f, const PPoly& g, const Int& p) {
  PPoly q, rem = f;
  Int ginv = pinv(g.back(), p);
  q.assign(f.size() - g.size() + 1, Int(0));
  while (rem.size() >= g.size()) {
    Int fac = rem.back() * ginv % p;
    size_t off = rem.size() - g.size();
    q[off] = fac;
    for (size_t i = 0; i < g.size(); ++i) rem[off + i] = ((rem[off + i] - fac * g[i]) % p + p) % p;
    rem.pop_back();
    pnorm(rem);
    if (rem.size() < g.size()) break;
  }
  pnorm(q);
  return q;
}

// equal-degree splitting of a monic squarefree product of degree-d irreducibles
void equal_degree(const PPoly& f, int d, const Int& p, std::mt19937_64& rng, std::vector<PPoly>& out) {
  int n = static_cast<int>(f.size()) - 1;
  if (n == d) {
    out.push_back(f);
    return;
  }
  Int exp = 1;
  for (int i = 0; i < d; ++i) exp *= p;
  exp = (exp - 1) / 2;
  while (true) {
    PPoly a(n);
    for (int i = 0; i < n; ++i) a[i] = Int(static_cast<uint64_t>(rng())) % p;
    pnorm(a);
    if (a.empty()) continue;
    PPoly t = ppowmod(a, exp, f, p);
    t = psub(std::move(t), PPoly{Int(1)}, p);
    if (t.empty()) continue;
    PPoly g = pgcd(t, f, p);
    if (g.size() <= 1 || g.size() == f.size()) continue;
    equal_degree(g, d, p, rng, out);
    equal_degree(pdivexact(f, g, p), d, p, rng, out);
    return;
  }
}

// all monic irreducible factors of a monic squarefree f over F_p
std::vector<PPoly> factor_mod_p(PPoly f, const Int& p, std::mt19937_64& rng) {
  std::vector<PPoly> out;
  // distinct degree
  PPoly h{Int(0), Int(1)};  // x
  PPoly x = h;
  int d = 0;
  while (static_cast<int>(f.size()) - 1 > 0) {
    ++d;
    if (2 * d > static_cast<int>(f.size()) - 1) {
      out.push_back(f);
      break;
    }
    h = ppowmod(std::move(h), p, f, p);
    PPoly g = pgcd(psub(h, x, p), f, p);
    if (g.size() > 1) {
      equal_degree(g, d, p, rng, out);
      f = pdivexact(f, g, p);
      h = pmod(std::move(h), f, p);
    }
  }
  return out;
}

std::vector<Int> symmetric_lift(const PPoly& f, const Int& p) {
  std::vector<Int> out(f.size());
  for (size_t i = 0; i < f.size(); ++i) out[i] = f[i] * 2 > p ? Int(f[i] - p) : f[i];
  return out;
}

std::vector<Int> zprimitive(std::vector<Int> v) {
  Int g = 0;
  for (const Int& c : v) g = gcd(g, c);
  if (!v.empty() && v.back() < 0) g = -g;
  if (g != 0 && g != 1)
    for (Int& c : v) c /= g;
  return v;
}

bool zdivides(const std::vector<Int>& g, const std::vector<Int>& f, std::vector<Int>* quot = nullptr) {
  // exact division test in Z[x]
  if (g.empty()) return f.empty();
  std::vector<Int> rem = f, q;
  if (f.size() < g.size()) return false;
  q.assign(f.size() - g.size() + 1, Int(0));
  while (rem.size() >= g.size()) {
    if (rem.back() % g.back() != 0) return false;
    Int fac = rem.back() / g.back();
    size_t off = rem.size() - g.size();
    q[off] = fac;
    for (size_t i = 0; i < g.size(); ++i) rem[off + i] -= fac * g[i];
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    if (rem.size() < g.size()) break;
  }
  if (!rem.empty()) return false;
  if (quot) *quot = std::move(q);
  return true;
}

QPoly qpoly_of_z(const std::vector<Int>& z) {
  std::vector<Rat> c(z.size());
  for (size_t i = 0; i < z.size(); ++i) c[i] = Rat(z[i]);
  return QPoly(std::move(c));
}

// factor a primitive squarefree integer polynomial, positive leading coefficient
std::vector<std::vector<Int>> factor_squarefree_z(std::vector<Int> f) {
  std::vector<std::vector<Int>> out;
  if (f.size() <= 2) {
    out.push_back(zprimitive(std::move(f)));
    return out;
  }
  // single large prime: any true factor's coefficients stay below p/2
  Int norm1 = 0;
  for (const Int& c : f) norm1 += iabs(c);
  Int bound = norm1 * iabs(f.back());
  for (size_t i = 0; i < f.size(); ++i) bound *= 2;
  Int p = next_prime_above(bound * 2 + 1);
  std::mt19937_64 rng(0x5eC71Cu);
  while (true) {
    if (f.back() % p != 0) {
      PPoly fp(f.size());
      for (size_t i = 0; i < f.size(); ++i) fp[i] = ((f[i] % p) + p) % p;
      pnorm(fp);
      // monicize
      Int linv = pinv(fp.back(), p);
      for (Int& c : fp) c = c * linv % p;
      PPoly der;
      for (size_t i = 1; i < fp.size(); ++i) der.push_back(fp[i] * Int(i) % p);
      pnorm(der);
      if (pgcd(fp, der, p).size() == 1) {
        std::vector<PPoly> mods = factor_mod_p(fp, p, rng);
        // recombine subsets; lc-correct candidates, trial divide over Z
        std::vector<int> alive(mods.size());
        for (size_t i = 0; i < alive.size(); ++i) alive[i] = static_cast<int>(i);
        std::vector<Int> rest = f;
        for (size_t take = 1; alive.size() >= 2 * take; ) {
          bool found = false;
          std::vector<int> comb(take);
          for (size_t i = 0; i < take; ++i) comb[i] = static_cast<int>(i);
          while (true) {
            PPoly prod{((rest.back() % p) + p) % p};
            for (size_t i = 0; i < take; ++i) prod = pmul(prod, mods[alive[comb[i]]], p);
            std::vector<Int> cand = zprimitive(symmetric_lift(prod, p));
            std::vector<Int> quot;
            if (cand.size() > 1 && zdivides(cand, rest, &quot)) {
              out.push_back(cand);
              rest = zprimitive(std::move(quot));
              std::vector<int> next_alive;
              for (size_t i = 0, ci = 0; i < alive.size(); ++i) {
                if (ci < take && comb[ci] == static_cast<int>(i)) {
                  ++ci;
                  continue;
                }
                next_alive.push_back(alive[i]);
              }
              alive = std::move(next_alive);
              found = true;
              break;
            }
            // next combination
            int pos = static_cast<int>(take) - 1;
            while (pos >= 0 && comb[pos] == static_cast<int>(alive.size() - take + pos)) --pos;
            if (pos < 0) break;
            ++comb[pos];
            for (size_t i = pos + 1; i < take; ++i) comb[i] = comb[i - 1] + 1;
          }
          if (!found) ++take;
        }
        if (rest.size() > 1) out.push_back(zprimitive(std::move(rest)));
        return out;
      }
    }
    p = next_prime_above(p);
  }
}

}  // namespace

QFactorization factorize(const QPoly& f) {
  QFactorization out;
  out.lead = Rat(0);
  if (f.is_zero()) return out;
  out.lead = f.lc();
  if (f.deg() == 0) return out;
  auto sq = squarefree_decomposition(f);
  for (const auto& [part, mult] : sq) {
    auto [cont, z] = primitive_z(part);
    (void)cont;  // part is monic; content only clears denominators
    for (auto& zf : factor_squarefree_z(z)) {
      QPoly mf = to_monic(qpoly_of_z(zf));
      out.factors.push_back(QFactor{std::move(mf), mult});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const QFactor& a, const QFactor& b) {
    if (a.factor.deg() != b.factor.deg()) return a.factor.deg() < b.factor.deg();
    for (int i = a.factor.deg(); i >= 0; --i) {
      if (a.factor.coeff(i) != b.factor.coeff(i)) return a.factor.coeff(i) < b.factor.coeff(i);
    }
    return a.mult < b.mult;
  });
  return out;
}

bool is_irreducible(const QPoly& f) {
  if (f.deg() <= 0) return false;
  if (f.deg() == 1) return true;
  auto fac = factorize(f);
  return fac.factors.size() == 1 && fac.factors[0].mult == 1;
}

}  // namespace sextic
