#include "latdeform/matrix.hpp"

namespace latdeform {

RatMat to_rat(const IntMat& m) {
  RatMat r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) r.at(i, j) = Rat(m.at(i, j));
  }
  return r;
}

IntVec transpose_apply(const IntMat& m, const IntVec& x) {
  if (static_cast<int>(x.size()) != m.rows()) {
    throw Error("transpose_apply: length mismatch");
  }
  IntVec r(m.cols(), Int(0));
  for (int i = 0; i < m.rows(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < m.cols(); ++j) r[j] += m.at(i, j) * x[i];
  }
  return r;
}

RatVec transpose_apply(const RatMat& m, const IntVec& x) {
  if (static_cast<int>(x.size()) != m.rows()) {
    throw Error("transpose_apply: length mismatch");
  }
  RatVec r(m.cols(), Rat(0));
  for (int i = 0; i < m.rows(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < m.cols(); ++j) r[j] += m.at(i, j) * Rat(x[i]);
  }
  return r;
}

IntVec row_times_mat(const IntVec& x, const IntMat& m) {
  if (static_cast<int>(x.size()) != m.rows()) {
    throw Error("row_times_mat: length mismatch");
  }
  IntVec r(m.cols(), Int(0));
  for (int i = 0; i < m.rows(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < m.cols(); ++j) r[j] += x[i] * m.at(i, j);
  }
  return r;
}

Int bareiss_det(IntMat m) {
  if (m.rows() != m.cols()) throw Error("bareiss_det: not square");
  int n = m.rows();
  if (n == 0) return Int(1);
  int sign = 1;
  Int prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i) {
        if (m.at(i, k) != 0) {
          p = i;
          break;
        }
      }
      if (p < 0) return Int(0);
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        Int q;
        mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        m.at(i, j) = q;
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  Int d = m.at(n - 1, n - 1);
  return sign > 0 ? d : Int(-d);
}

namespace {

// Row echelon reduction in place; returns pivot columns.
std::vector<int> echelon(RatMat& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i) {
      if (m.at(i, c) != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    m.swap_rows(r, p);
    Rat inv = 1 / m.at(r, c);
    for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rat f = m.at(i, c);
      for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Rat rat_det(RatMat m) {
  if (m.rows() != m.cols()) throw Error("rat_det: not square");
  int n = m.rows();
  Rat det = 1;
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int i = k; i < n; ++i) {
      if (m.at(i, k) != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) return Rat(0);
    if (p != k) {
      m.swap_rows(k, p);
      det = -det;
    }
    det *= m.at(k, k);
    Rat inv = 1 / m.at(k, k);
    for (int i = k + 1; i < n; ++i) {
      if (m.at(i, k) == 0) continue;
      Rat f = m.at(i, k) * inv;
      for (int j = k; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
    }
  }
  return det;
}

int rat_rank(RatMat m) { return static_cast<int>(echelon(m).size()); }

std::vector<RatVec> null_space(const RatMat& m) {
  RatMat e = m;
  std::vector<int> pivots = echelon(e);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    RatVec v(m.cols(), Rat(0));
    v[c] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = -e.at(static_cast<int>(r), c);
    }
    basis.push_back(v);
  }
  return basis;
}

std::optional<RatMat> rat_inverse(const RatMat& m) {
  if (m.rows() != m.cols()) throw Error("rat_inverse: not square");
  int n = m.rows();
  RatMat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  std::vector<int> pivots = echelon(aug);
  if (static_cast<int>(pivots.size()) != n || pivots[n - 1] != n - 1) {
    return std::nullopt;
  }
  RatMat inv(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  }
  return inv;
}

std::optional<RatVec> solve_right(const RatMat& m, const RatVec& b) {
  if (m.rows() != m.cols() || static_cast<int>(b.size()) != m.rows()) {
    throw Error("solve_right: shape mismatch");
  }
  std::optional<RatMat> inv = rat_inverse(m);
  if (!inv) return std::nullopt;
  RatVec x(m.cols(), Rat(0));
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) x[i] += inv->at(i, j) * b[j];
  }
  return x;
}

}  // namespace latdeform
