#include "sextic/groups.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace sextic {

FiniteGroup::FiniteGroup(std::string name, int order, std::vector<int> table, std::vector<int> generators)
    : n_(order), table_(std::move(table)), gens_(std::move(generators)), name_(std::move(name)) {
  if (static_cast<int>(table_.size()) != n_ * n_) throw std::invalid_argument("FiniteGroup: bad table size");
  // identity
  id_ = -1;
  for (int e = 0; e < n_; ++e) {
    bool ok = true;
    for (int a = 0; a < n_ && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) {
      id_ = e;
      break;
    }
  }
  if (id_ < 0) throw std::invalid_argument("FiniteGroup: no identity");
  // inverses
  inv_.assign(n_, -1);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b)
      if (mul(a, b) == id_ && mul(b, a) == id_) {
        inv_[a] = b;
        break;
      }
    if (inv_[a] < 0) throw std::invalid_argument("FiniteGroup: missing inverse");
  }
  // associativity
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw std::invalid_argument("FiniteGroup: not associative");
  if (gens_.empty()) {
    for (int a = 0; a < n_; ++a) gens_.push_back(a);
  }
  if (subgroup_order(gens_) != n_) throw std::invalid_argument("FiniteGroup: generators do not generate");
}

int FiniteGroup::element_order(int a) const {
  int x = a, k = 1;
  while (x != id_) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

int FiniteGroup::center_order() const {
  int c = 0;
  for (int a = 0; a < n_; ++a) {
    bool central = true;
    for (int b = 0; b < n_ && central; ++b) central = mul(a, b) == mul(b, a);
    if (central) ++c;
  }
  return c;
}

std::vector<int> FiniteGroup::element_order_profile() const {
  std::vector<int> p(n_);
  for (int a = 0; a < n_; ++a) p[a] = element_order(a);
  std::sort(p.begin(), p.end());
  return p;
}

int FiniteGroup::subgroup_order(const std::vector<int>& elems) const {
  std::vector<bool> in(n_, false);
  std::vector<int> stack;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = true;
      stack.push_back(x);
    }
  };
  add(id_);
  for (int e : elems) add(e);
  std::vector<int> members = stack;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (size_t i = 0; i < members.size(); ++i) {
      int y = members[i];
      for (int z : {mul(x, y), mul(y, x), inv_[x]})
        if (!in[z]) {
          in[z] = true;
          stack.push_back(z);
          members.push_back(z);
        }
    }
  }
  return static_cast<int>(members.size());
}

std::vector<Int> FiniteGroup::abelianization_invariants() const {
  // commutator subgroup by closure, then the quotient's cyclic decomposition
  std::set<int> comm;
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) comm.insert(mul(mul(a, b), inv_[mul(b, a)]));
  std::vector<int> c(comm.begin(), comm.end());
  // normal closure
  std::vector<bool> in(n_, false);
  std::vector<int> stack;
  for (int x : c)
    if (!in[x]) {
      in[x] = true;
      stack.push_back(x);
    }
  std::vector<int> members = stack;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : members) {
      for (int z : {mul(x, y), inv_[x]})
        if (!in[z]) {
          in[z] = true;
          stack.push_back(z);
          members.push_back(z);
        }
    }
    for (int g = 0; g < n_; ++g) {
      int z = mul(mul(g, x), inv_[g]);
      if (!in[z]) {
        in[z] = true;
        stack.push_back(z);
        members.push_back(z);
      }
    }
  }
  int h = static_cast<int>(members.size());
  int q = n_ / h;
  // quotient group table on cosets
  std::vector<int> coset(n_, -1);
  std::vector<int> reps;
  for (int a = 0; a < n_; ++a) {
    if (coset[a] >= 0) continue;
    int idx = static_cast<int>(reps.size());
    reps.push_back(a);
    for (int m : members) coset[mul(a, m)] = idx;
  }
  (void)q;
  std::vector<int> table(reps.size() * reps.size());
  for (size_t i = 0; i < reps.size(); ++i)
    for (size_t j = 0; j < reps.size(); ++j) table[i * reps.size() + j] = coset[mul(reps[i], reps[j])];
  FiniteGroup ab("ab", static_cast<int>(reps.size()), std::move(table), {});
  // invariant factors of the abelian quotient from its element-order counts:
  // split off one cyclic factor of exponent order per round, dividing the
  // counts of solutions of x^d = 1 (multiplicative over direct factors)
  std::map<int, long> count;
  for (int a = 0; a < ab.order(); ++a) ++count[ab.element_order(a)];
  long remaining = ab.order();
  std::vector<Int> factors;
  while (remaining > 1) {
    long expnt = 1;
    for (auto& [o, c] : count)
      if (c > 0) expnt = std::lcm(expnt, static_cast<long>(o));
    factors.push_back(expnt);
    std::map<int, long> newcount;
    for (long d = 1; d <= expnt; ++d) {
      if (expnt % d != 0) continue;
      long s = 0;
      for (auto& [o, c] : count)
        if (d % o == 0) s += c;
      long cyc = 0;
      for (long x = 0; x < expnt; ++x)
        if (d % (expnt / std::gcd(x, expnt)) == 0) ++cyc;
      long h = s / cyc;  // solutions of x^d = 1 in the complement
      for (long e = 1; e < d; ++e)
        if (d % e == 0 && newcount.count(static_cast<int>(e))) h -= newcount[static_cast<int>(e)];
      newcount[static_cast<int>(d)] = h;
    }
    count.clear();
    for (auto& [o, c] : newcount)
      if (c > 0) count[o] = c;
    remaining /= expnt;
  }
  std::sort(factors.begin(), factors.end());
  std::vector<Int> keep;
  for (auto& f : factors)
    if (f > 1) keep.push_back(f);
  return keep;
}

FiniteGroup trivial_group() { return FiniteGroup("C1", 1, {0}, {}); }

FiniteGroup cyclic(int n) {
  std::vector<int> t(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<size_t>(a) * n + b] = (a + b) % n;
  return FiniteGroup("C" + std::to_string(n), n, std::move(t), {n > 1 ? 1 : 0});
}

FiniteGroup metacyclic2(int n, int s, int t, const std::string& name) {
  // elements (i, e), i mod n, e in {0,1}; (i,0)(j,e)=(i+j,e);
  // (i,1)(j,e) = (i + s j + e t, e+1 with wrap adding t)
  int order = 2 * n;
  auto idx = [n](int i, int e) { return ((i % n) + n) % n + e * n; };
  std::vector<int> tab(static_cast<size_t>(order) * order);
  for (int i = 0; i < n; ++i)
    for (int e = 0; e < 2; ++e)
      for (int j = 0; j < n; ++j)
        for (int f = 0; f < 2; ++f) {
          int a = idx(i, e), b = idx(j, f);
          int ii, ee;
          if (e == 0) {
            ii = i + j;
            ee = f;
          } else {
            ii = i + s * j + (f == 1 ? t : 0);
            ee = 1 - f;
          }
          tab[static_cast<size_t>(a) * order + b] = idx(ii, ee);
        }
  return FiniteGroup(name, order, std::move(tab), {idx(1, 0), idx(0, 1)});
}

FiniteGroup dihedral(int order) {
  if (order < 2 || order % 2 != 0) throw std::invalid_argument("dihedral: even order required");
  return metacyclic2(order / 2, -1, 0, "D" + std::to_string(order));
}

FiniteGroup from_permutations(int degree, const std::vector<std::vector<int>>& gens, const std::string& name) {
  // closure of the generated permutation group
  std::vector<std::vector<int>> elems;
  std::map<std::vector<int>, int> index;
  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  elems.push_back(id);
  index[id] = 0;
  std::vector<int> queue{0};
  while (!queue.empty()) {
    int cur = queue.back();
    queue.pop_back();
    for (const auto& g : gens) {
      std::vector<int> nxt(degree);
      for (int i = 0; i < degree; ++i) nxt[i] = g[elems[cur][i]];
      if (!index.count(nxt)) {
        index[nxt] = static_cast<int>(elems.size());
        elems.push_back(nxt);
        queue.push_back(index[nxt]);
      }
    }
  }
  int n = static_cast<int>(elems.size());
  std::vector<int> tab(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> prod(degree);
      for (int i = 0; i < degree; ++i) prod[i] = elems[a][elems[b][i]];
      tab[static_cast<size_t>(a) * n + b] = index.at(prod);
    }
  std::vector<int> gidx;
  for (const auto& g : gens) gidx.push_back(index.at(g));
  return FiniteGroup(name, n, std::move(tab), gidx);
}

FiniteGroup symmetric3() {
  FiniteGroup g = from_permutations(3, {{1, 0, 2}, {1, 2, 0}}, "S3");
  return g;
}

FiniteGroup symmetric4() { return from_permutations(4, {{1, 0, 2, 3}, {1, 2, 3, 0}}, "S4"); }

FiniteGroup alternating4() { return from_permutations(4, {{1, 2, 0, 3}, {0, 2, 3, 1}}, "A4"); }

FiniteGroup sl23() {
  // 2x2 matrices over F3 with determinant 1, indexed on the fly
  std::vector<std::array<int, 4>> elems;
  std::map<std::array<int, 4>, int> index;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d)
          if (((a * d - b * c) % 3 + 3) % 3 == 1) {
            std::array<int, 4> m{a, b, c, d};
            index[m] = static_cast<int>(elems.size());
            elems.push_back(m);
          }
  int n = static_cast<int>(elems.size());
  std::vector<int> tab(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const auto &m = elems[x], &k = elems[y];
      std::array<int, 4> p{(m[0] * k[0] + m[1] * k[2]) % 3, (m[0] * k[1] + m[1] * k[3]) % 3,
                           (m[2] * k[0] + m[3] * k[2]) % 3, (m[2] * k[1] + m[3] * k[3]) % 3};
      tab[static_cast<size_t>(x) * n + y] = index.at(p);
    }
  return FiniteGroup("SL(2,3)", n, std::move(tab), {index.at({1, 1, 0, 1}), index.at({1, 0, 1, 1})});
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  int n = a.order() * b.order();
  std::vector<int> tab(static_cast<size_t>(n) * n);
  auto idx = [&](int x, int y) { return x * b.order() + y; };
  for (int x1 = 0; x1 < a.order(); ++x1)
    for (int y1 = 0; y1 < b.order(); ++y1)
      for (int x2 = 0; x2 < a.order(); ++x2)
        for (int y2 = 0; y2 < b.order(); ++y2)
          tab[static_cast<size_t>(idx(x1, y1)) * n + idx(x2, y2)] = idx(a.mul(x1, x2), b.mul(y1, y2));
  std::vector<int> gens;
  for (int g : a.generators()) gens.push_back(idx(g, b.identity()));
  for (int g : b.generators()) gens.push_back(idx(a.identity(), g));
  return FiniteGroup(a.name() + "x" + b.name(), n, std::move(tab), gens);
}

FiniteGroup semidirect_cyclic(int m, int k, int action) {
  // check the action is a unit of order dividing k
  long u = ((action % m) + m) % m;
  long pw = 1;
  for (int i = 0; i < k; ++i) pw = pw * u % m;
  if (pw != 1 % m) throw std::invalid_argument("semidirect_cyclic: action^k != 1 mod m");
  int n = m * k;
  auto idx = [&](int a, int b) { return a * k + b; };
  // precompute u^b mod m
  std::vector<long> upow(k);
  upow[0] = 1 % m;
  for (int b = 1; b < k; ++b) upow[b] = upow[b - 1] * u % m;
  std::vector<int> tab(static_cast<size_t>(n) * n);
  for (int a1 = 0; a1 < m; ++a1)
    for (int b1 = 0; b1 < k; ++b1)
      for (int a2 = 0; a2 < m; ++a2)
        for (int b2 = 0; b2 < k; ++b2) {
          int a = static_cast<int>((a1 + upow[b1] * a2) % m);
          int b = (b1 + b2) % k;
          tab[static_cast<size_t>(idx(a1, b1)) * n + idx(a2, b2)] = idx(a, b);
        }
  return FiniteGroup("C" + std::to_string(m) + ":C" + std::to_string(k), n, std::move(tab),
                     {idx(1 % m, 0), idx(0, 1 % k)});
}

FiniteGroup central_quotient(const FiniteGroup& g, int z, const std::string& name) {
  // cosets of the central cyclic subgroup <z>
  std::vector<int> zsub{g.identity()};
  int x = z;
  while (x != g.identity()) {
    zsub.push_back(x);
    x = g.mul(x, z);
  }
  for (int s : zsub)
    for (int a = 0; a < g.order(); ++a)
      if (g.mul(s, a) != g.mul(a, s)) throw std::invalid_argument("central_quotient: subgroup not central");
  std::vector<int> coset(g.order(), -1);
  std::vector<int> reps;
  for (int a = 0; a < g.order(); ++a) {
    if (coset[a] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(a);
    for (int s : zsub) coset[g.mul(a, s)] = id;
  }
  int n = static_cast<int>(reps.size());
  std::vector<int> tab(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) tab[static_cast<size_t>(i) * n + j] = coset[g.mul(reps[i], reps[j])];
  return FiniteGroup(name, n, std::move(tab), {});
}

// ---- isomorphism testing ----

namespace {

std::vector<int> small_generating_set(const FiniteGroup& g) {
  std::vector<int> gens;
  std::vector<int> closure_elems{g.identity()};
  auto closure_size = [&](const std::vector<int>& gg) { return g.subgroup_order(gg); };
  while (closure_size(gens) < g.order()) {
    int best = -1, best_size = -1;
    for (int cand = 0; cand < g.order(); ++cand) {
      std::vector<int> trial = gens;
      trial.push_back(cand);
      int s = closure_size(trial);
      if (s > best_size) {
        best_size = s;
        best = cand;
      }
    }
    gens.push_back(best);
  }
  return gens;
}

// words expressing every element in terms of the generators (BFS tree)
struct ElementWords {
  std::vector<std::vector<int>> word;  // indices into gens (only products, no inverses)
};

ElementWords element_words(const FiniteGroup& g, const std::vector<int>& gens) {
  ElementWords ew;
  ew.word.assign(g.order(), {});
  std::vector<bool> seen(g.order(), false);
  std::vector<int> queue{g.identity()};
  seen[g.identity()] = true;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int cur = queue[qi];
    for (size_t k = 0; k < gens.size(); ++k) {
      int nxt = g.mul(cur, gens[k]);
      if (!seen[nxt]) {
        seen[nxt] = true;
        ew.word[nxt] = ew.word[cur];
        ew.word[nxt].push_back(static_cast<int>(k));
        queue.push_back(nxt);
      }
    }
  }
  return ew;
}

}  // namespace

bool is_isomorphic_small(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return false;
  if (a.order() > 60) throw std::invalid_argument("is_isomorphic_small: order bound 60 exceeded");
  if (a.is_abelian() != b.is_abelian()) return false;
  if (a.element_order_profile() != b.element_order_profile()) return false;
  if (a.center_order() != b.center_order()) return false;
  if (a.abelianization_invariants() != b.abelianization_invariants()) return false;

  std::vector<int> gens = small_generating_set(a);
  ElementWords ew = element_words(a, gens);
  // candidate images per generator: same element order
  std::vector<std::vector<int>> candidates(gens.size());
  for (size_t k = 0; k < gens.size(); ++k)
    for (int x = 0; x < b.order(); ++x)
      if (b.element_order(x) == a.element_order(gens[k])) candidates[k].push_back(x);

  std::vector<int> img(gens.size(), -1);
  auto eval_in_b = [&](int elem_a) {
    int acc = b.identity();
    for (int k : ew.word[elem_a]) acc = b.mul(acc, img[k]);
    return acc;
  };
  auto extend = [&](auto&& self, size_t k) -> bool {
    if (k == gens.size()) {
      // the map elem -> eval must be a bijective homomorphism
      std::vector<int> phi(a.order());
      std::vector<bool> hit(b.order(), false);
      for (int x = 0; x < a.order(); ++x) {
        phi[x] = eval_in_b(x);
        if (hit[phi[x]]) return false;
        hit[phi[x]] = true;
      }
      for (int x = 0; x < a.order(); ++x)
        for (int y = 0; y < a.order(); ++y)
          if (phi[a.mul(x, y)] != b.mul(phi[x], phi[y])) return false;
      return true;
    }
    for (int cand : candidates[k]) {
      img[k] = cand;
      bool ok = true;
      // partial consistency: elements whose words use only gens 0..k must map consistently
      for (int x = 0; x < a.order() && ok; ++x) {
        bool usable = true;
        for (int t : ew.word[x])
          if (t > static_cast<int>(k)) {
            usable = false;
            break;
          }
        if (!usable) continue;
        // order preserved
        if (b.element_order(eval_in_b(x)) != a.element_order(x)) ok = false;
      }
      if (ok && self(self, k + 1)) return true;
    }
    img[k] = -1;
    return false;
  };
  return extend(extend, 0);
}

// ---- catalogue ----

namespace {

std::vector<FiniteGroup> build_catalogue() {
  std::vector<FiniteGroup> out;
  auto add = [&](FiniteGroup g) {
    for (const auto& h : out)
      if (h.order() == g.order() && is_isomorphic_small(h, g)) return;  // duplicate construction
    out.push_back(std::move(g));
  };

  for (int n = 1; n <= 24; ++n) add(cyclic(n));
  // abelian products
  add(direct_product(cyclic(2), cyclic(2)));
  add(direct_product(cyclic(4), cyclic(2)));
  add(direct_product(cyclic(2), direct_product(cyclic(2), cyclic(2))));
  add(direct_product(cyclic(3), cyclic(3)));
  add(direct_product(cyclic(6), cyclic(2)));
  add(direct_product(cyclic(8), cyclic(2)));
  add(direct_product(cyclic(4), cyclic(4)));
  add(direct_product(cyclic(4), direct_product(cyclic(2), cyclic(2))));
  add(direct_product(cyclic(2), direct_product(cyclic(2), direct_product(cyclic(2), cyclic(2)))));
  add(direct_product(cyclic(9), cyclic(2)));  // = C18
  add(direct_product(cyclic(6), cyclic(3)));
  add(direct_product(cyclic(10), cyclic(2)));
  add(direct_product(cyclic(12), cyclic(2)));
  add(direct_product(cyclic(6), direct_product(cyclic(2), cyclic(2))));
  // dihedral
  for (int o : {6, 8, 10, 12, 14, 16, 18, 20, 22, 24}) add(dihedral(o));
  // quaternion and friends
  add(metacyclic2(4, -1, 2, "Q8"));
  add(metacyclic2(8, -1, 4, "Q16"));
  add(metacyclic2(8, 3, 0, "SD16"));
  add(metacyclic2(8, 5, 0, "M4(2)"));
  add(metacyclic2(6, -1, 3, "Dic3"));
  add(metacyclic2(10, -1, 5, "Dic5"));
  add(metacyclic2(12, -1, 6, "Dic6"));
  // order 12
  add(alternating4());
  // order 16 odds and ends
  add(direct_product(dihedral(8), cyclic(2)));
  add(direct_product(metacyclic2(4, -1, 2, "Q8"), cyclic(2)));
  {
    // C4 x| C4: a^4, b^4, b a b^-1 = a^-1 (on 8 points)
    add(from_permutations(8, {{1, 2, 3, 0, 4, 5, 6, 7}, {3, 2, 1, 0, 5, 6, 7, 4}}, "C4:C4"));
    // (C4 x C2) x| C2: c a c^-1 = a b, c b c^-1 = b
    // a = 4-cycle twice (order 4), b = double transposition commuting with a
    // realize on 8 points: a = (0123)(4567), b = (04)(15)(26)(37)? b must equal a^? ... use a
    // direct construction below instead
  }
  {
    // (C4xC2) : C2 split, SmallGroup(16,3): a^4 = b^2 = c^2 = 1, ab=ba,
    // c a c = a b, c b c = b  -- as permutations on the 16 elements is overkill;
    // build the table over pairs ((i,j), k): a=(1,0,0), b=(0,1,0), c=(0,0,1)
    int n = 16;
    auto idx = [](int i, int j, int k) { return ((i & 3) << 2) | ((j & 1) << 1) | (k & 1); };
    std::vector<int> tab(static_cast<size_t>(n) * n);
    for (int i1 = 0; i1 < 4; ++i1)
      for (int j1 = 0; j1 < 2; ++j1)
        for (int k1 = 0; k1 < 2; ++k1)
          for (int i2 = 0; i2 < 4; ++i2)
            for (int j2 = 0; j2 < 2; ++j2)
              for (int k2 = 0; k2 < 2; ++k2) {
                // (a^i1 b^j1 c^k1)(a^i2 b^j2 c^k2); move c^k1 across a^i2 b^j2:
                // c a^i c = a^i b^i, c b c = b
                int i = i1 + i2;
                int j = j1 + j2 + (k1 == 1 ? i2 : 0);
                int k = k1 + k2;
                tab[static_cast<size_t>(idx(i1, j1, k1)) * n + idx(i2, j2, k2)] = idx(i, j & 1, k & 1);
              }
    add(FiniteGroup("(C4xC2):C2", n, std::move(tab), {idx(1, 0, 0), idx(0, 1, 0), idx(0, 0, 1)}));
  }
  {
    // the Pauli group D4 o C4 (central product): quotient of D4 x C4 by <(r^2, 2)>
    FiniteGroup d4 = dihedral(8);
    FiniteGroup c4 = cyclic(4);
    FiniteGroup prod = direct_product(d4, c4);
    // r = first generator of D4; r^2 paired with 2 in C4
    int r = d4.generators()[0];
    int r2 = d4.mul(r, r);
    int z = r2 * 4 + 2;
    add(central_quotient(prod, z, "D4oC4"));
  }
  // order 18
  add(direct_product(cyclic(3), symmetric3()));
  add(from_permutations(6, {{1, 2, 0, 3, 4, 5}, {0, 1, 2, 4, 5, 3}, {2, 1, 0, 5, 4, 3}}, "(C3xC3):C2"));
  // order 20
  add(semidirect_cyclic(5, 4, 2));  // Frobenius F20
  // order 21
  add(semidirect_cyclic(7, 3, 2));
  // order 24
  add(symmetric4());
  add(direct_product(alternating4(), cyclic(2)));
  add(sl23());
  add(semidirect_cyclic(3, 8, -1));  // C3 x| C8
  add(direct_product(cyclic(4), symmetric3()));
  add(direct_product(cyclic(2), dihedral(12)));
  add(direct_product(cyclic(2), metacyclic2(6, -1, 3, "Dic3")));
  add(direct_product(cyclic(3), dihedral(8)));
  add(direct_product(cyclic(3), metacyclic2(4, -1, 2, "Q8")));
  {
    // C3 x| D4 with the rotation acting by inversion: SmallGroup(24,8)
    // elements (a mod 3, d in D4 of order 8 table); action through r -> -1, s -> +1
    FiniteGroup d4 = dihedral(8);
    int n = 3 * 8;
    // the action of an element of D4 on C3: r^i s^j acts by (-1)^i
    // d4 = metacyclic2(4,-1,0): element x = i + 4e encodes r^i s^e, r acts by -1, s trivially
    auto act = [&](int d) { return (d % 4) % 2 == 0 ? 1 : -1; };
    auto idx = [&](int a, int d) { return a * 8 + d; };
    std::vector<int> tab(static_cast<size_t>(n) * n);
    for (int a1 = 0; a1 < 3; ++a1)
      for (int d1 = 0; d1 < 8; ++d1)
        for (int a2 = 0; a2 < 3; ++a2)
          for (int d2 = 0; d2 < 8; ++d2) {
            int a = ((a1 + act(d1) * a2) % 3 + 3) % 3;
            tab[static_cast<size_t>(idx(a1, d1)) * n + idx(a2, d2)] = idx(a, d4.mul(d1, d2));
          }
    add(FiniteGroup("C3:D4", n, std::move(tab), {idx(1, 0), idx(0, 1), idx(0, 4)}));
  }
  std::sort(out.begin(), out.end(), [](const FiniteGroup& x, const FiniteGroup& y) {
    if (x.order() != y.order()) return x.order() < y.order();
    return x.name() < y.name();
  });
  return out;
}

}  // namespace

const std::vector<FiniteGroup>& group_catalogue(int max_order) {
  static const std::vector<FiniteGroup> all = build_catalogue();
  static std::map<int, std::vector<FiniteGroup>> cut;
  if (max_order >= 24) return all;
  auto it = cut.find(max_order);
  if (it == cut.end()) {
    std::vector<FiniteGroup> sub;
    for (const auto& g : all)
      if (g.order() <= max_order) sub.push_back(g);
    it = cut.emplace(max_order, std::move(sub)).first;
  }
  return it->second;
}

}  // namespace sextic
