#ifndef LATDEFORM_TESTS_ORACLES_HPP
#define LATDEFORM_TESTS_ORACLES_HPP

// Slow reference implementations the tests compare against. Everything
// here is written for obviousness, not speed.

#include <vector>

#include "latdeform/matrix.hpp"
#include "latdeform/rational.hpp"

namespace oracles {

using latdeform::Int;
using latdeform::IntMat;
using latdeform::IntVec;

// Determinant by cofactor expansion along the first row.
inline Int det_cofactor(const IntMat& m) {
  int n = m.rows();
  if (n == 1) return m.at(0, 0);
  Int acc = 0;
  for (int j = 0; j < n; ++j) {
    IntMat minor(n - 1, n - 1);
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(r - 1, cc++) = m.at(r, c);
      }
    }
    Int term = m.at(0, j) * det_cofactor(minor);
    if (j % 2 == 0) acc += term;
    else acc -= term;
  }
  return acc;
}

// Membership by scanning every coefficient vector in [-radius, radius]^n.
inline bool member_box(const IntMat& basis, const IntVec& v, int radius) {
  int n = basis.rows();
  std::vector<int> c(n, -radius);
  for (;;) {
    IntVec w(basis.cols(), Int(0));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < basis.cols(); ++j) {
        w[j] += Int(c[i]) * basis.at(i, j);
      }
    }
    if (w == v) return true;
    int k = 0;
    while (k < n && c[k] == radius) c[k++] = -radius;
    if (k == n) return false;
    ++c[k];
  }
}

}  // namespace oracles

#endif
