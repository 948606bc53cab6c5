#include <random>

#include "doctest.h"
#include "latdeform/digraph.hpp"
#include "latdeform/errors.hpp"

using namespace latdeform;

namespace {

RatMat make_rat3(std::initializer_list<int> vals) {
  RatMat m(3, 3);
  auto it = vals.begin();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = Rat(*it++);
  return m;
}

const RatMat kLap25 = make_rat3({5, -3, -2, -1, 3, -2, -1, -1, 2});

WeightedDigraph random_digraph(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> w(1, 5);
  std::vector<WeightedEdge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (coin(rng) == 0) edges.push_back({i, j, Int(w(rng))});
    }
  }
  return WeightedDigraph(n, edges);
}

}  // namespace

TEST_CASE("digraph construction merges parallel edges") {
  std::vector<WeightedEdge> edges{{0, 1, Int(2)}, {0, 1, Int(3)},
                                  {1, 0, Int(1)}};
  WeightedDigraph g(2, edges);
  CHECK(g.edges().size() == 2);
  RatMat q = g.laplacian();
  CHECK(q.at(0, 0) == Rat(5));
  CHECK(q.at(0, 1) == Rat(-5));
  CHECK_THROWS_AS(WeightedDigraph(2, {{0, 0, Int(1)}}), SchemaError);
  CHECK_THROWS_AS(WeightedDigraph(2, {{0, 1, Int(0)}}), SchemaError);
  CHECK_THROWS_AS(WeightedDigraph(2, {{0, 5, Int(1)}}), SchemaError);
}

TEST_CASE("laplacian round trip") {
  WeightedDigraph g = digraph_from_laplacian(kLap25);
  CHECK(g.num_vertices() == 3);
  CHECK(g.edges().size() == 6);
  CHECK(g.laplacian() == kLap25);
  CHECK(is_laplacian_matrix(kLap25));
  RatMat bad = make_rat3({1, -1, 0, 1, -1, 0, 0, 0, 0});
  CHECK(!is_laplacian_matrix(bad));
}

TEST_CASE("left kernel of the running example") {
  CHECK(left_kernel_sigma(kLap25) == IntVec{Int(1), Int(2), Int(3)});
}

TEST_CASE("disconnected graphs are rejected") {
  RatMat two_cycles(4, 4);
  auto setc = [&](int i, int j, int v) { two_cycles.at(i, j) = Rat(v); };
  setc(0, 0, 1); setc(0, 1, -1); setc(1, 0, -1); setc(1, 1, 1);
  setc(2, 2, 1); setc(2, 3, -1); setc(3, 2, -1); setc(3, 3, 1);
  CHECK_THROWS_AS(left_kernel_sigma(two_cycles), NotStronglyConnected);
  CHECK(!digraph_from_laplacian(two_cycles).strongly_connected());

  RatMat one_way = make_rat3({1, -1, 0, 0, 1, -1, 0, 0, 0});
  CHECK_THROWS_AS(left_kernel_sigma(one_way), NotStronglyConnected);
}

TEST_CASE("sigma is primitive positive on random strong digraphs") {
  std::mt19937_64 rng(53);
  int strong = 0;
  for (int t = 0; t < 200; ++t) {
    WeightedDigraph g = random_digraph(rng, 2 + t % 5);
    RatMat q = g.laplacian();
    if (!g.strongly_connected()) {
      CHECK_THROWS_AS(left_kernel_sigma(q), NotStronglyConnected);
      continue;
    }
    ++strong;
    IntVec sigma = left_kernel_sigma(q);
    Int g0 = 0;
    for (const Int& s : sigma) {
      CHECK(s > 0);
      g0 = int_gcd(g0, s);
    }
    CHECK(g0 == 1);
    for (int j = 0; j < q.cols(); ++j) {
      Rat acc = 0;
      for (int i = 0; i < q.rows(); ++i) acc += Rat(sigma[i]) * q.at(i, j);
      CHECK(acc == 0);
    }
    CHECK(cone_membership(q, sigma));
  }
  CHECK(strong >= 30);
}

TEST_CASE("cycle rays reassemble the running example") {
  IntVec sigma{Int(1), Int(2), Int(3)};
  std::vector<CycleRay> rays = cycle_ray_decomposition(kLap25, sigma);
  REQUIRE(rays.size() == 4);
  CHECK(rays[0].cycle == std::vector<int>{0, 1});
  CHECK(rays[0].weight == Rat(2));
  CHECK(rays[1].cycle == std::vector<int>{0, 1, 2});
  CHECK(rays[1].weight == Rat(1));
  CHECK(rays[2].cycle == std::vector<int>{0, 2});
  CHECK(rays[2].weight == Rat(2));
  CHECK(rays[3].cycle == std::vector<int>{1, 2});
  CHECK(rays[3].weight == Rat(3));

  RatMat acc(3, 3);
  for (const CycleRay& r : rays) {
    acc = mat_add(acc, mat_scale(r.weight, ray_laplacian(r.cycle, sigma, 3)));
  }
  CHECK(acc == kLap25);
}

TEST_CASE("cycle rays reassemble random strong digraphs") {
  std::mt19937_64 rng(59);
  int done = 0;
  while (done < 40) {
    WeightedDigraph g = random_digraph(rng, 2 + done % 4);
    if (!g.strongly_connected()) continue;
    ++done;
    RatMat q = g.laplacian();
    IntVec sigma = left_kernel_sigma(q);
    std::vector<CycleRay> rays = cycle_ray_decomposition(q, sigma);
    RatMat acc(q.rows(), q.cols());
    for (const CycleRay& r : rays) {
      CHECK(r.weight > 0);
      acc = mat_add(acc,
                    mat_scale(r.weight, ray_laplacian(r.cycle, sigma,
                                                      q.rows())));
    }
    CHECK(acc == q);
  }
}

TEST_CASE("cone membership rejects matrices outside the cone") {
  IntVec sigma{Int(1), Int(2), Int(3)};
  CHECK(cone_membership(kLap25, sigma));
  RatMat off = make_rat3({5, -3, -2, 1, -3, 2, -1, -1, 2});
  CHECK(!cone_membership(off, sigma));
  CHECK(!cone_membership(kLap25, IntVec{Int(1), Int(1), Int(1)}));
}
