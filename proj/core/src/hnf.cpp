#include "latdeform/hnf.hpp"

namespace latdeform {

HnfResult hnf(const IntMat& m) {
  IntMat a = m;
  int rows = a.rows();
  int cols = a.cols();
  IntMat u = IntMat::identity(rows);

  auto row_op = [&](int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int j = 0; j < cols; ++j) a.at(dst, j) -= q * a.at(src, j);
    for (int j = 0; j < rows; ++j) u.at(dst, j) -= q * u.at(src, j);
  };
  auto swap = [&](int i, int j) {
    if (i == j) return;
    a.swap_rows(i, j);
    u.swap_rows(i, j);
  };
  auto negate = [&](int i) {
    for (int j = 0; j < cols; ++j) a.at(i, j) = -a.at(i, j);
    for (int j = 0; j < rows; ++j) u.at(i, j) = -u.at(i, j);
  };

  int pivot_row = 0;
  for (int col = 0; col < cols && pivot_row < rows; ++col) {
    // Euclidean elimination below pivot_row in this column.
    for (;;) {
      int best = -1;
      for (int i = pivot_row; i < rows; ++i) {
        if (a.at(i, col) == 0) continue;
        if (best < 0 || mpz_cmpabs(a.at(i, col).get_mpz_t(),
                                   a.at(best, col).get_mpz_t()) < 0) {
          best = i;
        }
      }
      if (best < 0) break;
      swap(pivot_row, best);
      bool done = true;
      for (int i = pivot_row + 1; i < rows; ++i) {
        if (a.at(i, col) == 0) continue;
        Int q = floor_div(a.at(i, col), a.at(pivot_row, col));
        row_op(i, pivot_row, q);
        if (a.at(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (a.at(pivot_row, col) == 0) continue;
    if (a.at(pivot_row, col) < 0) negate(pivot_row);
    // Reduce entries above the pivot into (-pivot, 0].
    for (int i = 0; i < pivot_row; ++i) {
      Int q = ceil_div(a.at(i, col), a.at(pivot_row, col));
      row_op(i, pivot_row, q);
    }
    ++pivot_row;
  }
  return HnfResult{a, u, pivot_row};
}

IntMat hnf_basis(const IntMat& m) {
  HnfResult r = hnf(m);
  IntMat b(r.rank, m.cols());
  for (int i = 0; i < r.rank; ++i) {
    for (int j = 0; j < m.cols(); ++j) b.at(i, j) = r.h.at(i, j);
  }
  return b;
}

bool same_row_lattice(const IntMat& a, const IntMat& b) {
  if (a.cols() != b.cols()) return false;
  return hnf_basis(a) == hnf_basis(b);
}

}  // namespace latdeform
