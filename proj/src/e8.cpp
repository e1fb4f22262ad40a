#include "sextic/e8.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <map>
#include <queue>
#include <unordered_map>
#include <unordered_set>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace sextic {

namespace {

std::vector<Root> build_roots() {
  std::vector<Root> out;
  // integer type: +-e_i +- e_j, doubled to (+-2, +-2)
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      for (int si : {-2, 2})
        for (int sj : {-2, 2}) {
          Root r{};
          r[i] = si;
          r[j] = sj;
          out.push_back(r);
        }
  // half-integer type: all +-1 with an even number of minus signs
  for (int mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    Root r;
    for (int i = 0; i < 8; ++i) r[i] = (mask >> i & 1) ? -1 : 1;
    out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<Root>& roots_cache() {
  static const std::vector<Root> r = build_roots();
  return r;
}

const std::vector<int8_t>& pairing_table() {
  static const std::vector<int8_t> t = [] {
    const auto& rs = roots_cache();
    std::vector<int8_t> tt(240 * 240);
    for (int i = 0; i < 240; ++i)
      for (int j = 0; j < 240; ++j) {
        int dot = 0;
        for (int k = 0; k < 8; ++k) dot += rs[i][k] * rs[j][k];
        tt[i * 240 + j] = static_cast<int8_t>(-dot / 4);
      }
    return tt;
  }();
  return t;
}

// exact inverse data for the doubled basis matrix: coords = adj * v / det
struct BasisInverse {
  int64_t adj[8][8];
  int64_t det;
};

const BasisInverse& basis_inverse() {
  static const BasisInverse bi = [] {
    IMat b(8, 8);
    for (int j = 0; j < 8; ++j)
      for (int i = 0; i < 8; ++i) b(i, j) = e8_basis()[j][i];
    Int dd = det(b);
    BasisInverse r{};
    r.det = static_cast<int64_t>(dd);
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) {
        IMat minor(7, 7);
        for (int a = 0, ai = 0; a < 8; ++a) {
          if (a == j) continue;
          for (int c = 0, ci = 0; c < 8; ++c) {
            if (c == i) continue;
            minor(ai, ci) = b(a, c);
            ++ci;
          }
          ++ai;
        }
        Int cof = det(minor);
        if ((i + j) % 2 != 0) cof = -cof;
        r.adj[i][j] = static_cast<int64_t>(cof);
      }
    return r;
  }();
  return bi;
}

// exact solve for coordinates in the fixed basis; false when not in the lattice
bool basis_coords_i64(const Root& v, std::array<int64_t, 8>& out) {
  const BasisInverse& bi = basis_inverse();
  for (int i = 0; i < 8; ++i) {
    int64_t acc = 0;
    for (int j = 0; j < 8; ++j) acc += bi.adj[i][j] * v[j];
    if (acc % bi.det != 0) return false;
    out[i] = acc / bi.det;
  }
  return true;
}

}  // namespace

const std::vector<Root>& e8_roots() { return roots_cache(); }

int root_index(const Root& r) {
  const auto& rs = roots_cache();
  auto it = std::lower_bound(rs.begin(), rs.end(), r);
  if (it == rs.end() || *it != r) return -1;
  return static_cast<int>(it - rs.begin());
}

int root_pairing(const Root& a, const Root& b) {
  int dot = 0;
  for (int k = 0; k < 8; ++k) dot += a[k] * b[k];
  return -dot / 4;
}

Root reflect(const Root& v, const Root& mirror) {
  int p = root_pairing(v, mirror);
  Root out;
  for (int k = 0; k < 8; ++k) out[k] = v[k] + p * mirror[k];
  return out;
}

const std::array<Root, 8>& e8_basis() {
  static const std::array<Root, 8> b = {{
      {1, -1, -1, -1, -1, -1, -1, 1},  // the half-integer node
      {2, 2, 0, 0, 0, 0, 0, 0},
      {-2, 2, 0, 0, 0, 0, 0, 0},
      {0, -2, 2, 0, 0, 0, 0, 0},
      {0, 0, -2, 2, 0, 0, 0, 0},
      {0, 0, 0, -2, 2, 0, 0, 0},
      {0, 0, 0, 0, -2, 2, 0, 0},
      {0, 0, 0, 0, 0, -2, 2, 0},
  }};
  return b;
}

const GramLattice& e8_lattice() {
  static const GramLattice g = [] {
    IMat m(8, 8);
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) m(i, j) = root_pairing(e8_basis()[i], e8_basis()[j]);
    return GramLattice(8, m);
  }();
  return g;
}

std::vector<Int> basis_coordinates(const Root& v) {
  std::array<int64_t, 8> c;
  if (!basis_coords_i64(v, c)) throw std::invalid_argument("basis_coordinates: vector not in E8");
  std::vector<Int> out(8);
  for (int i = 0; i < 8; ++i) out[i] = c[i];
  return out;
}

SublatticeEmbedding EmbeddingWitness::embedding() const {
  IMat b(8, static_cast<int>(roots.size()));
  for (size_t j = 0; j < roots.size(); ++j) {
    auto c = basis_coordinates(roots[j]);
    for (int i = 0; i < 8; ++i) b(i, static_cast<int>(j)) = c[i];
  }
  return SublatticeEmbedding(e8_lattice(), b);
}

bool EmbeddingWitness::valid() const {
  GramLattice target = spec_gram(spec);
  if (static_cast<int>(roots.size()) != target.rank) return false;
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = 0; j < roots.size(); ++j)
      if (Int(root_pairing(roots[i], roots[j])) != target.gram(static_cast<int>(i), static_cast<int>(j)))
        return false;
  return true;
}

namespace {

// summands in descending rank order; want[t][s] = required pairing with earlier roots
struct SearchPlan {
  std::vector<ADESymbol> summands;
  std::vector<int> offset;
  std::vector<std::vector<int8_t>> want;
  int total = 0;
};

SearchPlan make_plan(const RootSystemSpec& spec) {
  SearchPlan p;
  p.summands = spec.summands;
  std::sort(p.summands.begin(), p.summands.end(),
            [](const ADESymbol& a, const ADESymbol& b) { return a.rank() > b.rank() || (a.rank() == b.rank() && a < b); });
  for (const auto& s : p.summands) {
    p.offset.push_back(p.total);
    p.total += s.rank();
  }
  p.want.assign(p.total, {});
  for (int t = 0; t < p.total; ++t) p.want[t].assign(t, 0);
  for (size_t k = 0; k < p.summands.size(); ++k) {
    int off = p.offset[k];
    for (auto [i, j] : ade_edges(p.summands[k])) {
      int a = off + std::min(i, j), b = off + std::max(i, j);
      p.want[b][a] = 1;
    }
  }
  return p;
}

// 240-bit root set
struct RootMask {
  uint64_t w[4] = {~0ull, ~0ull, ~0ull, 0xffffull};  // 240 bits set
  void and_with(const RootMask& o) {
    for (int i = 0; i < 4; ++i) w[i] &= o.w[i];
  }
  void clear_below(int idx) {
    int word = idx >> 6, bit = idx & 63;
    for (int i = 0; i < word; ++i) w[i] = 0;
    if (word < 4) w[word] &= ~((bit == 0) ? 0ull : ((1ull << bit) - 1));
  }
};

// mask_by_pairing[p+2][r] = set of roots s with <r,s> = p
const std::array<std::array<RootMask, 240>, 5>& pairing_masks() {
  static const auto m = [] {
    std::array<std::array<RootMask, 240>, 5> mm{};
    for (auto& row : mm)
      for (auto& x : row) x = RootMask{{0, 0, 0, 0}};
    const auto& pt = pairing_table();
    for (int r = 0; r < 240; ++r)
      for (int s = 0; s < 240; ++s) {
        int p = pt[r * 240 + s] + 2;
        mm[p][r].w[s >> 6] |= 1ull << (s & 63);
      }
    return mm;
  }();
  return m;
}

struct Dfs {
  const SearchPlan& plan;
  std::vector<int> chosen;
  bool stop_at_first = false;
  std::optional<std::vector<int>> first;
  std::function<void(const std::vector<int>&)> on_leaf;

  explicit Dfs(const SearchPlan& p) : plan(p) {}

  bool run(int t) {  // true = stop
    if (t == plan.total) {
      if (stop_at_first) {
        first = chosen;
        return true;
      }
      on_leaf(chosen);
      return false;
    }
    if (t == 0) {
      // Weyl transitivity on roots: first root canonical
      chosen.push_back(0);
      bool s = run(1);
      chosen.pop_back();
      return s;
    }
    RootMask allowed;
    const auto& masks = pairing_masks();
    for (int s = 0; s < t; ++s) allowed.and_with(masks[plan.want[t][s] + 2][chosen[s]]);
    for (size_t k = 1; k < plan.summands.size(); ++k)
      if (plan.offset[k] == t && plan.summands[k] == plan.summands[k - 1])
        allowed.clear_below(chosen[plan.offset[k - 1]] + 1);  // equal summands ordered by first root
    for (int wi = 0; wi < 4; ++wi) {
      uint64_t bits = allowed.w[wi];
      while (bits) {
        int b = __builtin_ctzll(bits);
        bits &= bits - 1;
        int cand = (wi << 6) | b;
        chosen.push_back(cand);
        if (run(t + 1)) return true;
        chosen.pop_back();
      }
    }
    return false;
  }
};

EmbeddingWitness witness_from_indices(const RootSystemSpec& spec, const SearchPlan& plan, const std::vector<int>& idx) {
  std::vector<std::pair<ADESymbol, std::vector<Root>>> blocks;
  for (size_t k = 0; k < plan.summands.size(); ++k) {
    std::vector<Root> b;
    for (int i = 0; i < plan.summands[k].rank(); ++i) b.push_back(roots_cache()[idx[plan.offset[k] + i]]);
    blocks.emplace_back(plan.summands[k], std::move(b));
  }
  std::stable_sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  EmbeddingWitness w;
  w.spec = spec;
  for (auto& [sym, b] : blocks)
    for (auto& r : b) w.roots.push_back(r);
  return w;
}

// canonical row Hermite form of the span of the rows; key for lattice identity
using Key = std::string;

Key hnf_key(std::vector<std::array<int64_t, 8>> rows) {
  const int m = static_cast<int>(rows.size());
  int r = 0;
  for (int c = 0; c < 8 && r < m; ++c) {
    int piv = -1;
    for (int i = r; i < m; ++i)
      if (rows[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    for (int i = r + 1; i < m; ++i) {
      while (rows[i][c] != 0) {
        int64_t q = rows[r][c] / rows[i][c];
        for (int k = 0; k < 8; ++k) rows[r][k] -= q * rows[i][k];
        std::swap(rows[r], rows[i]);
      }
    }
    if (rows[r][c] < 0)
      for (int k = 0; k < 8; ++k) rows[r][k] = -rows[r][k];
    for (int i = 0; i < r; ++i) {
      int64_t q = rows[i][c] / rows[r][c];
      if (rows[i][c] % rows[r][c] < 0) --q;
      if (q != 0)
        for (int k = 0; k < 8; ++k) rows[i][k] -= q * rows[r][k];
    }
    ++r;
  }
  rows.resize(r);
  Key key;
  key.reserve(static_cast<size_t>(r) * 16);
  for (const auto& row : rows)
    for (int k = 0; k < 8; ++k) {
      int16_t v = static_cast<int16_t>(row[k]);
      key.push_back(static_cast<char>(v & 0xff));
      key.push_back(static_cast<char>((v >> 8) & 0xff));
    }
  return key;
}

Key key_of_root_indices(const std::vector<int>& idx) {
  std::vector<std::array<int64_t, 8>> rows(idx.size());
  for (size_t i = 0; i < idx.size(); ++i)
    if (!basis_coords_i64(roots_cache()[idx[i]], rows[i])) throw std::logic_error("key: not a lattice vector");
  return hnf_key(std::move(rows));
}

std::vector<std::array<int64_t, 8>> rows_of_key(const Key& k) {
  std::vector<std::array<int64_t, 8>> rows(k.size() / 16);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < 8; ++j) {
      uint16_t lo = static_cast<uint8_t>(k[i * 16 + 2 * j]);
      uint16_t hi = static_cast<uint8_t>(k[i * 16 + 2 * j + 1]);
      rows[i][j] = static_cast<int16_t>(lo | (hi << 8));
    }
  return rows;
}

Root root_from_coords(const std::array<int64_t, 8>& c) {
  Root v{};
  for (int i = 0; i < 8; ++i) {
    int64_t acc = 0;
    for (int j = 0; j < 8; ++j) acc += e8_basis()[j][i] * c[j];
    v[i] = static_cast<int>(acc);
  }
  return v;
}

// simple reflections as integer matrices acting on basis coordinates
const std::array<std::array<std::array<int64_t, 8>, 8>, 8>& reflection_matrices() {
  static const auto mats = [] {
    std::array<std::array<std::array<int64_t, 8>, 8>, 8> out{};
    for (int g = 0; g < 8; ++g)
      for (int j = 0; j < 8; ++j) {
        Root img = reflect(e8_basis()[j], e8_basis()[g]);
        std::array<int64_t, 8> c;
        if (!basis_coords_i64(img, c)) throw std::logic_error("reflection_matrices");
        for (int i = 0; i < 8; ++i) out[g][i][j] = c[i];
      }
    return out;
  }();
  return mats;
}

Key reflect_key(const Key& k, int g) {
  auto rows = rows_of_key(k);
  const auto& m = reflection_matrices()[g];
  for (auto& c : rows) {
    std::array<int64_t, 8> r{};
    for (int i = 0; i < 8; ++i) {
      int64_t acc = 0;
      for (int j = 0; j < 8; ++j) acc += m[i][j] * c[j];
      r[i] = acc;
    }
    c = r;
  }
  return hnf_key(std::move(rows));
}

// membership of a vector (by coords) in the row span of an HNF
bool hnf_contains(const std::vector<std::array<int64_t, 8>>& hrows, std::array<int64_t, 8> v) {
  size_t ri = 0;
  for (int col = 0; col < 8; ++col) {
    int64_t piv = ri < hrows.size() ? hrows[ri][col] : 0;
    bool pivot_here = ri < hrows.size() && [&] {
      // pivot column of row ri is the first nonzero column
      for (int c2 = 0; c2 < col; ++c2)
        if (hrows[ri][c2] != 0) return false;
      return hrows[ri][col] != 0;
    }();
    if (pivot_here) {
      if (v[col] % piv != 0) return false;
      int64_t q = v[col] / piv;
      if (q != 0)
        for (int k = 0; k < 8; ++k) v[k] -= q * hrows[ri][k];
      ++ri;
    } else if (v[col] != 0) {
      return false;
    }
  }
  return true;
}

// distinct images (as sublattices) of embeddings; value = one witness as root indices
std::map<Key, std::vector<int>> enumerate_images(const RootSystemSpec& spec) {
  std::map<Key, std::vector<int>> images;
  if (spec.total_rank() > 8 || spec.empty()) return images;
  SearchPlan plan = make_plan(spec);
  Dfs dfs(plan);
  dfs.on_leaf = [&](const std::vector<int>& idx) {
    Key k = key_of_root_indices(idx);
    auto it = images.find(k);
    if (it == images.end()) images.emplace(std::move(k), idx);
  };
  dfs.run(0);
  return images;
}

}  // namespace

std::optional<EmbeddingWitness> find_embedding(const RootSystemSpec& spec) {
  if (spec.empty()) return EmbeddingWitness{spec, {}};
  if (spec.total_rank() > 8) return std::nullopt;
  SearchPlan plan = make_plan(spec);
  Dfs dfs(plan);
  dfs.stop_at_first = true;
  dfs.run(0);
  if (!dfs.first) return std::nullopt;
  return witness_from_indices(spec, plan, *dfs.first);
}

std::vector<EmbeddingWitness> all_embeddings_up_to_isometry(const RootSystemSpec& spec) {
  if (spec.empty()) return {EmbeddingWitness{spec, {}}};
  auto images = enumerate_images(spec);
  SearchPlan plan = make_plan(spec);
  std::vector<EmbeddingWitness> reps;
  std::vector<Key> rep_keys;
  std::unordered_set<Key> visited;
  for (const auto& [key, idx] : images) {
    if (visited.count(key)) continue;
    Key best = key;
    std::queue<Key> bfs;
    bfs.push(key);
    visited.insert(key);
    while (!bfs.empty()) {
      Key cur = bfs.front();
      bfs.pop();
      for (int g = 0; g < 8; ++g) {
        Key nxt = reflect_key(cur, g);
        if (visited.insert(nxt).second) {
          if (images.count(nxt) && nxt < best) best = nxt;
          bfs.push(nxt);
        }
      }
    }
    reps.push_back(witness_from_indices(spec, plan, images.at(best)));
    rep_keys.push_back(best);
  }
  // canonical order
  std::vector<size_t> order(reps.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return rep_keys[a] < rep_keys[b]; });
  std::vector<EmbeddingWitness> out;
  for (size_t i : order) out.push_back(std::move(reps[i]));
  return out;
}

namespace {

std::vector<Root> image_root_set(const EmbeddingWitness& w) {
  std::vector<std::array<int64_t, 8>> rows(w.roots.size());
  for (size_t i = 0; i < w.roots.size(); ++i) basis_coords_i64(w.roots[i], rows[i]);
  auto hrows = rows_of_key(hnf_key(std::move(rows)));
  std::vector<Root> out;
  for (const auto& cand : roots_cache()) {
    std::array<int64_t, 8> c;
    basis_coords_i64(cand, c);
    if (hnf_contains(hrows, c)) out.push_back(cand);
  }
  return out;
}

size_t rank_of_rows(std::vector<std::array<int64_t, 8>> rows) { return rows_of_key(hnf_key(std::move(rows))).size(); }

}  // namespace

bool witnesses_equivalent(const EmbeddingWitness& a, const EmbeddingWitness& b, long budget) {
  if (!(a.spec == b.spec)) return false;
  if (a.roots.empty()) return true;
  if (const char* env = std::getenv("SEXTIC_SEARCH_BUDGET")) budget = std::atol(env);
  std::vector<Root> rb = image_root_set(b);
  if (image_root_set(a).size() != rb.size()) return false;

  // variables: the witness basis roots, then a completion to full rank 8
  std::vector<Root> vars = a.roots;
  std::vector<std::array<int64_t, 8>> span(vars.size());
  for (size_t i = 0; i < vars.size(); ++i) basis_coords_i64(vars[i], span[i]);
  const size_t base = vars.size();
  for (const auto& cand : roots_cache()) {
    if (span.size() == 8) break;
    std::array<int64_t, 8> c;
    basis_coords_i64(cand, c);
    auto trial = span;
    trial.push_back(c);
    if (rank_of_rows(trial) > span.size()) {
      span = std::move(trial);
      vars.push_back(cand);
    }
  }
  if (vars.size() != 8) throw std::logic_error("witnesses_equivalent: completion failed");

  long nodes = 0;
  std::vector<Root> img;
  auto leaf_ok = [&]() -> bool {
    // the assignment preserves all pairings on a full-rank set, so it defines
    // an isometry of Q^8; it lies in Aut(E8) iff it is integral on the basis
    QMat v(8, 8), w(8, 8);
    for (int j = 0; j < 8; ++j) {
      std::array<int64_t, 8> cv, ci;
      basis_coords_i64(vars[j], cv);
      basis_coords_i64(img[j], ci);
      for (int i = 0; i < 8; ++i) {
        v(i, j) = Rat(cv[i]);
        w(i, j) = Rat(ci[i]);
      }
    }
    // g = w * v^{-1}
    QMat a2(8, 16);
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) {
        a2(i, j) = v(i, j);
        a2(i, 8 + j) = (i == j) ? Rat(1) : Rat(0);
      }
    for (int k = 0; k < 8; ++k) {
      int p = k;
      while (p < 8 && a2(p, k) == 0) ++p;
      if (p == 8) return false;
      if (p != k) a2.swap_rows(p, k);
      Rat pivq = a2(k, k);
      for (int j = k; j < 16; ++j) a2(k, j) /= pivq;
      for (int i = 0; i < 8; ++i) {
        if (i == k || a2(i, k) == 0) continue;
        Rat f = a2(i, k);
        for (int j = k; j < 16; ++j) a2(i, j) -= f * a2(k, j);
      }
    }
    QMat vinv(8, 8);
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) vinv(i, j) = a2(i, 8 + j);
    QMat g = w * vinv;
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j)
        if (den(g(i, j)) != 1) return false;
    return true;
  };
  auto extend = [&](auto&& self, size_t t) -> bool {
    if (++nodes > budget) throw SearchBudget("witnesses_equivalent: node budget exceeded");
    if (t == vars.size()) return leaf_ok();
    const std::vector<Root>& domain = t < base ? rb : roots_cache();
    for (const auto& cand : domain) {
      bool ok = true;
      for (size_t s = 0; s < t && ok; ++s)
        ok = root_pairing(cand, img[s]) == root_pairing(vars[t], vars[s]);
      if (!ok) continue;
      img.push_back(cand);
      if (self(self, t + 1)) return true;
      img.pop_back();
    }
    return false;
  };
  return extend(extend, 0);
}

namespace {

std::vector<ClassificationRow> classify_rows(const std::vector<RootSystemSpec>& specs,
                                             const std::function<bool(const TorsionGroup&)>& pred, bool parallel) {
  std::vector<std::vector<ClassificationRow>> partial(specs.size());
  auto work = [&](int i) {
    const RootSystemSpec& spec = specs[i];
    auto reps = all_embeddings_up_to_isometry(spec);
    std::map<std::vector<Int>, int> by_torsion;
    for (const auto& w : reps) {
      if (w.roots.empty()) continue;
      TorsionGroup k = quotient_torsion(w.embedding());
      ++by_torsion[k.invariant_factors];
    }
    for (const auto& [factors, count] : by_torsion) {
      TorsionGroup k{factors};
      if (pred(k)) partial[i].push_back(ClassificationRow{spec, k, count});
    }
  };
#if defined(_OPENMP)
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < static_cast<int>(specs.size()); ++i) work(i);
  } else
#endif
  {
    (void)parallel;
    for (int i = 0; i < static_cast<int>(specs.size()); ++i) work(i);
  }
  std::vector<ClassificationRow> rows;
  for (auto& p : partial)
    for (auto& r : p) rows.push_back(std::move(r));
  return rows;
}

}  // namespace

std::vector<ClassificationRow> classify_by_predicate(const std::function<bool(const TorsionGroup&)>& pred) {
  return classify_rows(all_specs_up_to_rank(8), pred, true);
}

std::vector<ClassificationRow> classify_by_predicate_serial(const std::function<bool(const TorsionGroup&)>& pred) {
  return classify_rows(all_specs_up_to_rank(8), pred, false);
}

std::vector<ClassificationRow> classify_odd_torsion() {
  return classify_by_predicate([](const TorsionGroup& k) { return !k.trivial() && k.order() % 2 != 0; });
}

int dihedral_quotient_count(const RootSystemSpec& spec, const Int& n) {
  if (n < 2) throw std::invalid_argument("dihedral_quotient_count: n must be a prime");
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) throw std::invalid_argument("dihedral_quotient_count: n must be a prime");
  auto w = find_embedding(spec);
  if (!w) throw std::invalid_argument("dihedral_quotient_count: spec does not embed in E8");
  TorsionGroup k = spec.empty() ? TorsionGroup{} : quotient_torsion(w->embedding());
  int r = 0;
  for (const Int& d : k.invariant_factors)
    if (d % n == 0) ++r;
  Int count = 0, pw = 1;
  for (int i = 0; i < r; ++i) {
    count += pw;
    pw *= n;
  }
  return static_cast<int>(count);
}

bool LemmaE8Report::all_ok() const {
  return t_unimodular && t_signature == std::array<int, 3>{1, 1, 0} && f_characteristic && complement_rank == 8 &&
         complement_even && complement_unimodular && complement_signature == std::array<int, 3>{0, 8, 0} &&
         complement_root_count == 240;
}

LemmaE8Report verify_lemma_e8() {
  // the odd unimodular lattice of signature (1,9)
  IMat g(10, 10);
  g(0, 0) = 1;
  for (int i = 1; i < 10; ++i) g(i, i) = -1;
  GramLattice h(10, g);
  // e0^2 = -1, f^2 = 0, e0.f = 1; f = (3,1,...,1) is characteristic
  std::vector<Int> e0(10, Int(0)), f(10, Int(1));
  e0[1] = -1;
  f[0] = 3;
  LemmaE8Report rep;
  IMat t(10, 2);
  for (int i = 0; i < 10; ++i) {
    t(i, 0) = e0[i];
    t(i, 1) = f[i];
  }
  SublatticeEmbedding tb(h, t);
  GramLattice tg = tb.induced();
  rep.t_unimodular = iabs(det(tg.gram)) == 1;
  rep.t_signature = signature(tg);
  rep.f_characteristic = is_characteristic(h, f);
  SublatticeEmbedding comp = orthogonal_complement(tb);
  GramLattice cg = comp.induced();
  rep.complement_rank = cg.rank;
  rep.complement_even = is_even(cg);
  rep.complement_unimodular = iabs(det(cg.gram)) == 1;
  rep.complement_signature = signature(cg);
  rep.complement_root_count = static_cast<int>(short_vectors(cg, Int(-2)).size());
  return rep;
}

}  // namespace sextic
