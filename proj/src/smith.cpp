#include <cstdlib>

#include "sextic/lattice.hpp"

namespace sextic {

namespace {

// position of the entry with smallest nonzero |value| in m at or below/right of (t,t)
bool find_pivot(const IMat& m, int t, int& pi, int& pj) {
  bool found = false;
  Int best;
  for (int i = t; i < m.rows(); ++i)
    for (int j = t; j < m.cols(); ++j) {
      if (m(i, j) == 0) continue;
      Int a = iabs(m(i, j));
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace

SmithDecomposition smith_normal_form(const IMat& m0) {
  IMat d = m0;
  const int r = d.rows(), c = d.cols();
  IMat u = IMat::identity(r), v = IMat::identity(c);

  auto row_addmul = [&](int dst, int src, const Int& f) {
    for (int k = 0; k < c; ++k) d(dst, k) += f * d(src, k);
    for (int k = 0; k < r; ++k) u(dst, k) += f * u(src, k);
  };
  auto col_addmul = [&](int dst, int src, const Int& f) {
    for (int k = 0; k < r; ++k) d(k, dst) += f * d(k, src);
    for (int k = 0; k < c; ++k) v(k, dst) += f * v(k, src);
  };

  int t = 0;
  const int n = std::min(r, c);
  while (t < n) {
    int pi, pj;
    if (!find_pivot(d, t, pi, pj)) break;
    if (pi != t) {
      d.swap_rows(t, pi);
      u.swap_rows(t, pi);
    }
    if (pj != t) {
      d.swap_cols(t, pj);
      v.swap_cols(t, pj);
    }
    bool clean = true;
    for (int i = t + 1; i < r; ++i) {
      if (d(i, t) == 0) continue;
      Int q = ndiv(d(i, t), d(t, t));
      if (q != 0) row_addmul(i, t, -q);
      if (d(i, t) != 0) clean = false;
    }
    for (int j = t + 1; j < c; ++j) {
      if (d(t, j) == 0) continue;
      Int q = ndiv(d(t, j), d(t, t));
      if (q != 0) col_addmul(j, t, -q);
      if (d(t, j) != 0) clean = false;
    }
    if (!clean) continue;  // smaller remainders exist; repick pivot
    // divisibility: fold any entry the pivot misses back into column t
    bool repeat = false;
    for (int i = t + 1; i < r && !repeat; ++i)
      for (int j = t + 1; j < c && !repeat; ++j)
        if (d(i, j) % d(t, t) != 0) {
          row_addmul(t, i, Int(1));
          repeat = true;
        }
    if (repeat) continue;
    if (d(t, t) < 0) {
      for (int k = 0; k < c; ++k) d(t, k) = -d(t, k);
      for (int k = 0; k < r; ++k) u(t, k) = -u(t, k);
    }
    ++t;
  }
  return {u, d, v};
}

std::vector<Int> torsion_invariants(const IMat& m) {
  SmithDecomposition s = smith_normal_form(m);
  std::vector<Int> out;
  const int n = std::min(m.rows(), m.cols());
  for (int i = 0; i < n; ++i)
    if (s.d(i, i) > 1) out.push_back(s.d(i, i));
  return out;
}

Int det(const IMat& m) {
  // fraction-free Bareiss
  const int n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("det: square matrix required");
  if (n == 0) return 1;
  IMat a = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

IMat integer_kernel(const IMat& m) {
  SmithDecomposition s = smith_normal_form(m);
  const int n = std::min(m.rows(), m.cols());
  int rank = 0;
  for (int i = 0; i < n; ++i)
    if (s.d(i, i) != 0) ++rank;
  const int k = m.cols() - rank;
  IMat ker(m.cols(), k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < m.cols(); ++i) ker(i, j) = s.v(i, rank + j);
  return ker;
}

}  // namespace sextic
