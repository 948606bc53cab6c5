#include <random>

#include "doctest.h"
#include "latdeform/errors.hpp"
#include "latdeform/hnf.hpp"
#include "latdeform/laplacianize.hpp"

using namespace latdeform;

namespace {

IntMat make(int r, int c, std::initializer_list<int> vals) {
  IntMat m(r, c);
  auto it = vals.begin();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = Int(*it++);
  return m;
}

void check_presentation(const Lattice& l, const LaplacianPresentation& p) {
  int n = l.rank();
  REQUIRE(p.q.rows() == n + 1);
  CHECK(p.sigma[0] == 1);
  CHECK(is_laplacian_matrix(to_rat(p.q)));
  CHECK(left_kernel_sigma(to_rat(p.q)) == p.sigma);
  CHECK(cone_membership(to_rat(p.q), p.sigma));
  // Rows 1..n form the designated basis of the lattice.
  IntMat rows(n, n + 1);
  for (int i = 0; i < n; ++i) rows.set_row(i, p.q.row(i + 1));
  CHECK(same_row_lattice(rows, l.basis()));
  WeightedDigraph g(n + 1, p.edges);
  CHECK(g.strongly_connected());
  CHECK(g.laplacian() == to_rat(p.q));
}

}  // namespace

TEST_CASE("script vector on reference inputs") {
  CHECK(script_vector(make(1, 1, {1})) == IntVec{Int(1)});
  CHECK(script_vector(make(2, 2, {3, -2, -1, 2})) == IntVec{Int(2), Int(3)});
  CHECK(script_vector(make(2, 2, {2, -1, -1, 2})) == IntVec{Int(1), Int(1)});
  CHECK_THROWS_AS(script_vector(make(2, 2, {1, 1, -1, 2})), Error);
  CHECK_THROWS_AS(script_vector(make(2, 2, {1, -2, -1, 1})), Error);
  CHECK_THROWS_AS(script_vector(make(2, 2, {1, -1, -2, 2})), Error);
}

TEST_CASE("running example gets its known presentation") {
  Lattice l = Lattice::from_basis(make(2, 3, {-1, 3, -2, -1, -1, 2}));
  LaplacianPresentation p = laplacianize(l);
  CHECK(p.q == make(3, 3, {8, -4, -4, -2, 2, 0, -1, -1, 2}));
  CHECK(p.sigma == IntVec{Int(1), Int(3), Int(2)});
  CHECK(p.reduced_basis == make(2, 2, {2, 0, -1, 2}));
  check_presentation(l, p);
  REQUIRE(p.edges.size() == 5);
  CHECK(p.edges[0].src == 0);
  CHECK(p.edges[0].dst == 1);
  CHECK(p.edges[0].weight == 4);
}

TEST_CASE("rank one lattice") {
  Lattice l = Lattice::from_basis(make(1, 2, {1, -1}));
  LaplacianPresentation p = laplacianize(l);
  CHECK(p.q == make(2, 2, {1, -1, -1, 1}));
  CHECK(p.sigma == IntVec{Int(1), Int(1)});
  check_presentation(l, p);
}

TEST_CASE("triangle sublattice") {
  Lattice l = Lattice::from_basis(make(2, 3, {2, -1, -1, -1, 2, -1}));
  LaplacianPresentation p = laplacianize(l);
  check_presentation(l, p);
  CHECK(l.index() == 3);
}

TEST_CASE("random lattices satisfy all postconditions") {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<int> d(-3, 3);
  int done = 0;
  while (done < 12) {
    int n = 2 + done % 2;
    IntMat proj(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) proj.at(i, j) = Int(d(rng));
    Int det = bareiss_det(proj);
    if (det == 0 || abs(det) > 12) continue;
    IntMat b(n, n + 1);
    for (int i = 0; i < n; ++i) {
      Int s = 0;
      for (int j = 0; j < n; ++j) s += proj.at(i, j);
      b.at(i, 0) = -s;
      for (int j = 0; j < n; ++j) b.at(i, j + 1) = proj.at(i, j);
    }
    Lattice l = Lattice::from_basis(b);
    check_presentation(l, laplacianize(l));
    ++done;
  }
}
