#pragma once

#include <cassert>
#include <initializer_list>
#include <vector>

#include "sextic/numeric.hpp"

namespace sextic {

// Dense row-major matrix over an exact scalar type.
template <class T>
class Mat {
 public:
  Mat() : r_(0), c_(0) {}
  Mat(int r, int c) : r_(r), c_(c), d_(static_cast<size_t>(r) * c) {}
  Mat(int r, int c, std::initializer_list<T> xs) : r_(r), c_(c), d_(xs) {
    assert(static_cast<int>(d_.size()) == r * c);
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }

  T& operator()(int i, int j) { return d_[static_cast<size_t>(i) * c_ + j]; }
  const T& operator()(int i, int j) const { return d_[static_cast<size_t>(i) * c_ + j]; }

  bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && d_ == o.d_; }

  Mat transposed() const {
    Mat t(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Mat operator*(const Mat& o) const {
    assert(c_ == o.r_);
    Mat p(r_, o.c_);
    for (int i = 0; i < r_; ++i)
      for (int k = 0; k < c_; ++k) {
        const T& a = (*this)(i, k);
        if (a == T(0)) continue;
        for (int j = 0; j < o.c_; ++j) p(i, j) += a * o(k, j);
      }
    return p;
  }

  void swap_rows(int i, int j) {
    for (int k = 0; k < c_; ++k) std::swap((*this)(i, k), (*this)(j, k));
  }
  void swap_cols(int i, int j) {
    for (int k = 0; k < r_; ++k) std::swap((*this)(k, i), (*this)(k, j));
  }

 private:
  int r_, c_;
  std::vector<T> d_;
};

using IMat = Mat<Int>;
using QMat = Mat<Rat>;

}  // namespace sextic
