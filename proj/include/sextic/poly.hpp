#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "sextic/numeric.hpp"

namespace sextic {

// Univariate polynomial over an exact field K, coefficients ascending,
// normalized with no trailing zeros (zero polynomial = empty vector).
template <class K>
struct Poly {
  std::vector<K> c;

  Poly() = default;
  Poly(int v) {  // NOLINT(google-explicit-constructor) - enables nesting Poly<Poly<K>>
    if (v != 0) c.push_back(K(v));
  }
  explicit Poly(std::vector<K> cc) : c(std::move(cc)) { normalize(); }
  static Poly constant(const K& k) {
    Poly p;
    if (!(k == K(0))) p.c.push_back(k);
    return p;
  }
  static Poly x() { return Poly(std::vector<K>{K(0), K(1)}); }

  void normalize() {
    while (!c.empty() && c.back() == K(0)) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int deg() const { return static_cast<int>(c.size()) - 1; }
  const K& lc() const { return c.back(); }
  K coeff(int i) const { return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : K(0); }

  bool operator==(const Poly& o) const { return c == o.c; }

  Poly operator-() const {
    Poly r = *this;
    for (auto& a : r.c) a = K(0) - a;
    return r;
  }
  Poly operator+(const Poly& o) const {
    Poly r;
    r.c.resize(std::max(c.size(), o.c.size()), K(0));
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    r.normalize();
    return r;
  }
  Poly operator-(const Poly& o) const { return *this + (-o); }
  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    Poly r;
    r.c.assign(c.size() + o.c.size() - 1, K(0));
    for (size_t i = 0; i < c.size(); ++i) {
      if (c[i] == K(0)) continue;
      for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] = r.c[i + j] + c[i] * o.c[j];
    }
    r.normalize();
    return r;
  }
  Poly operator*(const K& k) const {
    Poly r = *this;
    for (auto& a : r.c) a = a * k;
    r.normalize();
    return r;
  }

  K eval(const K& at) const {
    K acc(0);
    for (size_t i = c.size(); i-- > 0;) acc = acc * at + c[i];
    return acc;
  }
};

template <class K>
Poly<K> shifted(const Poly<K>& p, const K& by) {  // p(x + by)
  Poly<K> acc, pw = Poly<K>::constant(K(1));
  Poly<K> lin(std::vector<K>{by, K(1)});
  for (size_t i = 0; i < p.c.size(); ++i) {
    acc = acc + pw * p.c[i];
    pw = pw * lin;
  }
  return acc;
}

template <class K>
Poly<K> compose(const Poly<K>& p, const Poly<K>& inner) {
  Poly<K> acc, pw = Poly<K>::constant(K(1));
  for (size_t i = 0; i < p.c.size(); ++i) {
    acc = acc + pw * p.c[i];
    pw = pw * inner;
  }
  return acc;
}

template <class K>
Poly<K> derivative(const Poly<K>& p) {
  Poly<K> r;
  for (int i = 1; i <= p.deg(); ++i) r.c.push_back(p.c[i] * K(i));
  r.normalize();
  return r;
}

// t^k p(1/t) for k >= deg p
template <class K>
Poly<K> reversed(const Poly<K>& p, int k) {
  if (k < p.deg()) throw std::invalid_argument("reversed: k below degree");
  std::vector<K> r(static_cast<size_t>(k) + 1, K(0));
  for (int i = 0; i <= p.deg(); ++i) r[k - i] = p.c[i];
  Poly<K> out(std::move(r));
  return out;
}

template <class K>
std::pair<Poly<K>, Poly<K>> divmod(const Poly<K>& a, const Poly<K>& b) {
  if (b.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
  Poly<K> q, r = a;
  if (r.deg() < b.deg()) return {q, r};
  q.c.assign(r.deg() - b.deg() + 1, K(0));
  while (!r.is_zero() && r.deg() >= b.deg()) {
    K f = r.lc() / b.lc();
    int shift = r.deg() - b.deg();
    q.c[shift] = q.c[shift] + f;
    for (int i = 0; i <= b.deg(); ++i) r.c[shift + i] = r.c[shift + i] - f * b.c[i];
    r.normalize();
  }
  q.normalize();
  return {q, r};
}

template <class K>
Poly<K> exact_div(const Poly<K>& a, const Poly<K>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("exact_div: nonzero remainder");
  return q;
}

template <class K>
bool divides(const Poly<K>& b, const Poly<K>& a) {
  if (b.is_zero()) return a.is_zero();
  return divmod(a, b).second.is_zero();
}

template <class K>
Poly<K> to_monic(const Poly<K>& p) {
  if (p.is_zero()) return p;
  Poly<K> r = p;
  K inv = K(1) / p.lc();
  for (auto& a : r.c) a = a * inv;
  return r;
}

template <class K>
Poly<K> gcd(const Poly<K>& a0, const Poly<K>& b0) {
  Poly<K> a = a0, b = b0;
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = b;
    b = r;
  }
  return to_monic(a);
}

// g = gcd, plus s,t with s a + t b = g
template <class K>
Poly<K> ext_gcd(const Poly<K>& a, const Poly<K>& b, Poly<K>& s, Poly<K>& t) {
  Poly<K> r0 = a, r1 = b;
  Poly<K> s0 = Poly<K>::constant(K(1)), s1;
  Poly<K> t0, t1 = Poly<K>::constant(K(1));
  while (!r1.is_zero()) {
    auto [q, r2] = divmod(r0, r1);
    r0 = r1;
    r1 = r2;
    Poly<K> s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  if (r0.is_zero()) {
    s = Poly<K>();
    t = Poly<K>();
    return r0;
  }
  K inv = K(1) / r0.lc();
  s = s0 * inv;
  t = t0 * inv;
  return to_monic(r0);
}

template <class K>
Poly<K> squarefree_part(const Poly<K>& p) {
  if (p.deg() <= 0) return to_monic(p);
  return to_monic(exact_div(p, gcd(p, derivative(p))));
}

// Yun's algorithm: p = prod f_i^i with f_i squarefree coprime, monic
template <class K>
std::vector<std::pair<Poly<K>, int>> squarefree_decomposition(const Poly<K>& p0) {
  std::vector<std::pair<Poly<K>, int>> out;
  Poly<K> p = to_monic(p0);
  if (p.deg() <= 0) return out;
  Poly<K> g = gcd(p, derivative(p));
  Poly<K> w = exact_div(p, g), y = exact_div(derivative(p), g);
  int i = 1;
  while (w.deg() > 0) {
    Poly<K> z = y - derivative(w);
    Poly<K> f = gcd(w, z);
    if (f.deg() > 0) out.emplace_back(to_monic(f), i);
    w = exact_div(w, f);
    y = exact_div(z, f);
    ++i;
  }
  return out;
}

// order of vanishing of p at the root locus of monic q (number of times q divides p);
// returns a large sentinel when p = 0
inline constexpr int kInfiniteOrder = 1 << 20;

template <class K>
int order_at(const Poly<K>& p, const Poly<K>& q) {
  if (p.is_zero()) return kInfiniteOrder;
  int n = 0;
  Poly<K> r = p;
  while (true) {
    auto [d, rem] = divmod(r, q);
    if (!rem.is_zero()) return n;
    r = d;
    ++n;
  }
}

template <class K>
Poly<K> pow(const Poly<K>& p, int e) {
  Poly<K> acc = Poly<K>::constant(K(1)), b = p;
  while (e > 0) {
    if (e & 1) acc = acc * b;
    b = b * b;
    e >>= 1;
  }
  return acc;
}

// resultant via the Euclidean scheme (exact over a field)
template <class K>
K resultant(const Poly<K>& a0, const Poly<K>& b0) {
  Poly<K> a = a0, b = b0;
  if (a.is_zero() || b.is_zero()) return K(0);
  K acc(1);
  bool neg = false;
  while (b.deg() > 0) {
    auto r = divmod(a, b).second;
    if ((a.deg() * b.deg()) % 2 != 0) neg = !neg;
    // res(a,b) = (-1)^(da db) lc(b)^(da - dr) res(b, r)
    int dr = r.is_zero() ? -1 : r.deg();
    K f(1);
    for (int i = 0; i < a.deg() - dr; ++i) f = f * b.lc();
    acc = acc * f;
    a = b;
    b = r;
    if (b.is_zero()) return K(0);
  }
  // b constant nonzero: res = lc(b)^deg(a)
  K f(1);
  for (int i = 0; i < a.deg(); ++i) f = f * b.c[0];
  acc = acc * f;
  if (neg) acc = K(0) - acc;
  return acc;
}

// resultant of two polynomials over an integral domain P with exact division:
// Sylvester determinant evaluated by fraction-free elimination
template <class P>
P ring_resultant(const Poly<P>& f, const Poly<P>& g) {
  int m = f.deg(), n = g.deg();
  if (m < 0 || n < 0) return P(0);
  auto powp = [](P base, int e) {
    P acc(1);
    for (int i = 0; i < e; ++i) acc = acc * base;
    return acc;
  };
  if (m == 0) return powp(f.coeff(0), n);
  if (n == 0) return powp(g.coeff(0), m);
  int size = m + n;
  std::vector<std::vector<P>> a(size, std::vector<P>(size, P(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) a[i][i + j] = f.coeff(m - j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) a[n + i][i + j] = g.coeff(n - j);
  P prev(1);
  int sign = 1;
  for (int k = 0; k < size - 1; ++k) {
    if (a[k][k] == P(0)) {
      int p = -1;
      for (int i = k + 1; i < size; ++i)
        if (!(a[i][k] == P(0))) {
          p = i;
          break;
        }
      if (p < 0) return P(0);
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i)
      for (int j = k + 1; j < size; ++j) {
        auto [q, r] = divmod(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
        if (!r.is_zero()) throw std::logic_error("ring_resultant: inexact Bareiss step");
        a[i][j] = q;
      }
    prev = a[k][k];
  }
  P out = a[size - 1][size - 1];
  return sign > 0 ? out : P(0) - out;
}

// long division where quotient coefficients are computed by exact division in
// the coefficient ring; succeeds exactly when p divides f (p nonzero)
template <class P>
bool ring_exact_div(const Poly<P>& f, const Poly<P>& p, Poly<P>& quotient) {
  if (p.is_zero()) return false;
  Poly<P> r = f, q;
  if (f.is_zero()) {
    quotient = q;
    return true;
  }
  if (r.deg() < p.deg()) return false;
  q.c.assign(r.deg() - p.deg() + 1, P(0));
  while (!r.is_zero() && r.deg() >= p.deg()) {
    auto [qq, rr] = divmod(r.lc(), p.lc());
    if (!rr.is_zero()) return false;
    int shift = r.deg() - p.deg();
    q.c[shift] = q.c[shift] + qq;
    for (int i = 0; i <= p.deg(); ++i) r.c[shift + i] = r.c[shift + i] - qq * p.c[i];
    r.normalize();
  }
  q.normalize();
  quotient = q;
  return r.is_zero();
}

using QPoly = Poly<Rat>;

std::string to_string(const QPoly& p, const std::string& var = "x");
QPoly qpoly_from_string(const std::string& s, const std::string& var = "x");

}  // namespace sextic
