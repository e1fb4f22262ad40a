#include "sextic/lattice.hpp"

#include <algorithm>

namespace sextic {

GramLattice::GramLattice(int r, IMat g) : rank(r), gram(std::move(g)) {
  if (gram.rows() != rank || gram.cols() != rank)
    throw std::invalid_argument("GramLattice: dimension mismatch");
  for (int i = 0; i < rank; ++i)
    for (int j = i + 1; j < rank; ++j)
      if (gram(i, j) != gram(j, i)) throw std::invalid_argument("GramLattice: gram not symmetric");
}

SublatticeEmbedding::SublatticeEmbedding(GramLattice a, IMat b) : ambient(std::move(a)), basis(std::move(b)) {
  if (basis.rows() != ambient.rank) throw std::invalid_argument("SublatticeEmbedding: row count != ambient rank");
  // columns must be independent over Q
  IMat bt = basis.transposed();
  SmithDecomposition s = smith_normal_form(basis);
  int rank = 0;
  const int n = std::min(basis.rows(), basis.cols());
  for (int i = 0; i < n; ++i)
    if (s.d(i, i) != 0) ++rank;
  if (rank != basis.cols()) throw std::invalid_argument("SublatticeEmbedding: dependent columns");
}

GramLattice SublatticeEmbedding::induced() const {
  IMat g = basis.transposed() * ambient.gram * basis;
  return GramLattice(basis.cols(), g);
}

Int TorsionGroup::order() const {
  Int o = 1;
  for (const Int& d : invariant_factors) o *= d;
  return o;
}

TorsionGroup discriminant_group(const GramLattice& l) {
  if (det(l.gram) == 0) throw DegenerateLattice("discriminant_group: degenerate lattice");
  return TorsionGroup{torsion_invariants(l.gram)};
}

TorsionGroup quotient_torsion(const SublatticeEmbedding& e) {
  return TorsionGroup{torsion_invariants(e.basis)};
}

SublatticeEmbedding orthogonal_complement(const SublatticeEmbedding& e) {
  IMat pairing = e.basis.transposed() * e.ambient.gram;  // k x n
  return SublatticeEmbedding(e.ambient, integer_kernel(pairing));
}

bool is_primitive(const SublatticeEmbedding& e) { return quotient_torsion(e).trivial(); }

bool is_even(const GramLattice& l) {
  for (int i = 0; i < l.rank; ++i)
    if (l.gram(i, i) % 2 != 0) return false;
  return true;
}

std::array<int, 3> signature(const GramLattice& l) {
  // symmetric congruence diagonalization over Q
  const int n = l.rank;
  QMat a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = Rat(l.gram(i, j));
  std::array<int, 3> sig{0, 0, 0};
  for (int k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a(i, i) != 0) {
          p = i;
          break;
        }
      if (p >= 0) {
        a.swap_rows(k, p);
        a.swap_cols(k, p);
      } else {
        int bi = -1, bj = -1;
        for (int i = k; i < n && bi < 0; ++i)
          for (int j = i + 1; j < n; ++j)
            if (a(i, j) != 0) {
              bi = i;
              bj = j;
              break;
            }
        if (bi < 0) {
          sig[2] = n - k;
          return sig;
        }
        // row/col bi += row/col bj makes the (bi,bi) entry 2*a(bi,bj) != 0
        for (int t = 0; t < n; ++t) a(bi, t) += a(bj, t);
        for (int t = 0; t < n; ++t) a(t, bi) += a(t, bj);
        a.swap_rows(k, bi);
        a.swap_cols(k, bi);
      }
    }
    for (int i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rat f = a(i, k) / a(k, k);
      for (int t = 0; t < n; ++t) a(i, t) -= f * a(k, t);
      for (int t = 0; t < n; ++t) a(t, i) -= f * a(t, k);
    }
    if (a(k, k) > 0)
      ++sig[0];
    else
      ++sig[1];
  }
  return sig;
}

GramLattice direct_sum(const GramLattice& a, const GramLattice& b) {
  IMat g(a.rank + b.rank, a.rank + b.rank);
  for (int i = 0; i < a.rank; ++i)
    for (int j = 0; j < a.rank; ++j) g(i, j) = a.gram(i, j);
  for (int i = 0; i < b.rank; ++i)
    for (int j = 0; j < b.rank; ++j) g(a.rank + i, a.rank + j) = b.gram(i, j);
  return GramLattice(a.rank + b.rank, g);
}

bool is_characteristic(const GramLattice& l, const std::vector<Int>& v) {
  if (static_cast<int>(v.size()) != l.rank) throw std::invalid_argument("is_characteristic: size mismatch");
  // v.x = x.x mod 2 holds for all x iff it holds on a basis
  for (int i = 0; i < l.rank; ++i) {
    Int dot = 0;
    for (int j = 0; j < l.rank; ++j) dot += l.gram(i, j) * v[j];
    if ((dot - l.gram(i, i)) % 2 != 0) return false;
  }
  return true;
}

SublatticeEmbedding saturation(const SublatticeEmbedding& e) {
  IMat ann = integer_kernel(e.basis.transposed());       // n x (n-k)
  IMat sat = integer_kernel(ann.transposed());           // n x k, saturated
  return SublatticeEmbedding(e.ambient, sat);
}

namespace {

// q(x) = sum_i d_i (x_i + sum_{j>i} c_ij x_j)^2 for a positive definite form
struct Squares {
  std::vector<Rat> d;
  QMat c;
};

Squares complete_squares(const QMat& a0) {
  const int n = a0.rows();
  QMat a = a0;
  Squares s;
  s.d.resize(n);
  s.c = QMat(n, n);
  for (int k = 0; k < n; ++k) {
    if (a(k, k) <= 0) throw DegenerateLattice("short_vectors: form not definite");
    s.d[k] = a(k, k);
    for (int j = k + 1; j < n; ++j) s.c(k, j) = a(k, j) / a(k, k);
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a(i, j) -= a(k, i) * a(k, j) / a(k, k);
  }
  return s;
}

void enumerate(const Squares& s, int k, std::vector<Rat>& shift, std::vector<Int>& x, const Rat& budget,
               std::vector<std::vector<Int>>& out, bool half) {
  if (k < 0) {
    bool zero = true;
    for (const Int& xi : x)
      if (xi != 0) zero = false;
    if (zero) return;
    if (budget != 0) return;
    if (half) {
      for (const Int& xi : x) {
        if (xi > 0) break;
        if (xi < 0) return;
      }
    }
    out.push_back(x);
    return;
  }
  // d_k (x_k + shift_k)^2 <= budget
  Rat dk = s.d[k], sh = shift[k];
  Rat lim2 = budget / dk;
  // integer range: (x + sh)^2 <= lim2
  Int lo, hi;
  {
    // conservative bounds via integer sqrt of ceil(lim2)
    Int n2 = num(lim2), d2 = den(lim2);
    Int c = (n2 + d2 - 1) / d2;
    Int r = boost::multiprecision::sqrt(c);
    while (r * r < c) ++r;
    Rat shq = sh;
    lo = fdiv(num(-shq - Rat(r)), den(-shq - Rat(r)));
    hi = -fdiv(num(shq - Rat(r)), den(shq - Rat(r)));
  }
  for (Int v = lo; v <= hi; ++v) {
    Rat t = Rat(v) + sh;
    Rat cost = dk * t * t;
    if (cost > budget) continue;
    x[k] = v;
    std::vector<Rat> shift2 = shift;
    for (int i = 0; i < k; ++i) shift2[i] += s.c(i, k) * Rat(v);
    enumerate(s, k - 1, shift2, x, budget - cost, out, half);
    x[k] = 0;
  }
}

}  // namespace

std::vector<std::vector<Int>> short_vectors(const GramLattice& l, const Int& square, bool half) {
  const int n = l.rank;
  QMat a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = Rat(-l.gram(i, j));
  Squares s = complete_squares(a);
  std::vector<Rat> shift(n, Rat(0));
  std::vector<Int> x(n, Int(0));
  std::vector<std::vector<Int>> out;
  enumerate(s, n - 1, shift, x, Rat(-square), out, half);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sextic
