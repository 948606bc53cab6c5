#ifndef LATDEFORM_MATRIX_HPP
#define LATDEFORM_MATRIX_HPP

#include <optional>
#include <vector>

#include "latdeform/errors.hpp"
#include "latdeform/rational.hpp"

namespace latdeform {

// Dense row-major matrix over an exact coefficient type.
template <typename T>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols)
      : rows_(rows), cols_(cols),
        data_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {
    if (rows < 0 || cols < 0) throw Error("Mat: negative dimension");
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& at(int i, int j) { return data_[idx(i, j)]; }
  const T& at(int i, int j) const { return data_[idx(i, j)]; }

  std::vector<T> row(int i) const {
    std::vector<T> r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
  }

  void set_row(int i, const std::vector<T>& v) {
    if (static_cast<int>(v.size()) != cols_) throw Error("set_row: length");
    for (int j = 0; j < cols_; ++j) at(i, j) = v[j];
  }

  void swap_rows(int i, int j) {
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
  }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

 private:
  size_t idx(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) {
      throw Error("Mat: index out of range");
    }
    return static_cast<size_t>(i) * cols_ + j;
  }

  int rows_;
  int cols_;
  std::vector<T> data_;
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

template <typename T>
Mat<T> transpose(const Mat<T>& m) {
  Mat<T> t(m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) t.at(j, i) = m.at(i, j);
  }
  return t;
}

template <typename T>
Mat<T> mat_mul(const Mat<T>& a, const Mat<T>& b) {
  if (a.cols() != b.rows()) throw Error("mat_mul: shape mismatch");
  Mat<T> c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) {
        c.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  }
  return c;
}

template <typename T>
Mat<T> mat_add(const Mat<T>& a, const Mat<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error("mat_add: shape mismatch");
  }
  Mat<T> c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
  }
  return c;
}

template <typename T>
Mat<T> mat_sub(const Mat<T>& a, const Mat<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error("mat_sub: shape mismatch");
  }
  Mat<T> c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
  }
  return c;
}

template <typename T, typename S>
Mat<T> mat_scale(const S& s, const Mat<T>& m) {
  Mat<T> c(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) c.at(i, j) = s * m.at(i, j);
  }
  return c;
}

RatMat to_rat(const IntMat& m);

// Applies the transpose of m to x: result_j = sum_i m(i,j) x_i.
IntVec transpose_apply(const IntMat& m, const IntVec& x);
RatVec transpose_apply(const RatMat& m, const IntVec& x);

// row vector times matrix: result_j = sum_i x_i m(i,j).
IntVec row_times_mat(const IntVec& x, const IntMat& m);

// Fraction-free determinant of a square integer matrix.
Int bareiss_det(IntMat m);

Rat rat_det(RatMat m);
int rat_rank(RatMat m);

// Basis of the right null space {x : m x = 0}.
std::vector<RatVec> null_space(const RatMat& m);

// Inverse of a square matrix; nullopt when singular.
std::optional<RatMat> rat_inverse(const RatMat& m);

// Solves m x = b for square m; nullopt when singular.
std::optional<RatVec> solve_right(const RatMat& m, const RatVec& b);

}  // namespace latdeform

#endif
