#include <random>

#include "doctest.h"
#include "latdeform/errors.hpp"
#include "latdeform/matrix.hpp"
#include "support/oracles.hpp"

using namespace latdeform;

namespace {

IntMat make(int n, std::initializer_list<int> vals) {
  IntMat m(n, n);
  auto it = vals.begin();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = Int(*it++);
  return m;
}

}  // namespace

TEST_CASE("determinant matches cofactor expansion") {
  CHECK(bareiss_det(make(2, {3, -2, -1, 2})) == 4);
  CHECK(bareiss_det(IntMat::identity(4)) == 1);
  CHECK(bareiss_det(make(2, {1, 2, 2, 4})) == 0);

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-9, 9);
  std::uniform_int_distribution<int> dim(1, 5);
  for (int t = 0; t < 60; ++t) {
    int n = dim(rng);
    IntMat m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = Int(d(rng));
    CHECK(bareiss_det(m) == oracles::det_cofactor(m));
  }
}

TEST_CASE("rank and inverse") {
  RatMat m = to_rat(make(3, {1, 2, 3, 4, 5, 6, 7, 8, 9}));
  CHECK(rat_rank(m) == 2);
  CHECK(!rat_inverse(m).has_value());

  RatMat a = to_rat(make(2, {3, -2, -1, 2}));
  auto inv = rat_inverse(a);
  REQUIRE(inv.has_value());
  CHECK(mat_mul(a, *inv) == to_rat(IntMat::identity(2)));
  CHECK(rat_det(a) == Rat(4));
}

TEST_CASE("null space spans the kernel") {
  RatMat m = to_rat(make(2, {1, 1, 1, 1}));
  auto ker = null_space(m);
  REQUIRE(ker.size() == 1);
  Rat s = ker[0][0] + ker[0][1];
  CHECK(s == 0);
  CHECK(!(ker[0][0] == 0 && ker[0][1] == 0));

  CHECK(null_space(to_rat(IntMat::identity(3))).empty());
}

TEST_CASE("transpose application") {
  IntMat q = make(3, {5, -3, -2, -1, 3, -2, -1, -1, 2});
  IntVec x{Int(0), Int(1), Int(1)};
  CHECK(transpose_apply(q, x) == IntVec{Int(-2), Int(2), Int(0)});
  IntVec y{Int(1), Int(0), Int(0)};
  CHECK(transpose_apply(q, y) == IntVec{Int(5), Int(-3), Int(-2)});
  CHECK(row_times_mat(x, q) == IntVec{Int(-2), Int(2), Int(0)});
}

TEST_CASE("solve_right solves exactly") {
  RatMat a = to_rat(make(2, {3, -2, -1, 2}));
  RatVec b{Rat(1), Rat(3)};
  auto sol = solve_right(a, b);
  REQUIRE(sol.has_value());
  for (int i = 0; i < 2; ++i) {
    Rat acc = 0;
    for (int j = 0; j < 2; ++j) acc += a.at(i, j) * (*sol)[j];
    CHECK(acc == b[i]);
  }
  RatMat sing = to_rat(make(2, {1, 2, 2, 4}));
  CHECK(!solve_right(sing, RatVec{Rat(1), Rat(0)}).has_value());
}

TEST_CASE("matrix arithmetic") {
  IntMat a = make(2, {1, 2, 3, 4});
  IntMat b = make(2, {5, 6, 7, 8});
  CHECK(mat_add(a, b) == make(2, {6, 8, 10, 12}));
  CHECK(mat_sub(b, a) == make(2, {4, 4, 4, 4}));
  CHECK(mat_mul(a, b) == make(2, {19, 22, 43, 50}));
  CHECK(mat_scale(Int(2), a) == make(2, {2, 4, 6, 8}));
  RatMat r = mat_scale(Rat(1, 2), to_rat(a));
  CHECK(r.at(0, 1) == Rat(1));
  CHECK(r.at(1, 0) == Rat(3, 2));
  CHECK_THROWS_AS(mat_add(a, IntMat(1, 2)), Error);
}
