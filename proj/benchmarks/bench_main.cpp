#include <benchmark/benchmark.h>

#include "latdeform/chipfiring.hpp"
#include "latdeform/deformation.hpp"
#include "latdeform/groebner.hpp"
#include "latdeform/hnf.hpp"
#include "latdeform/laplacianize.hpp"
#include "latdeform/lattice.hpp"
#include "latdeform/scarf.hpp"

namespace {

using namespace latdeform;

IntMat example_laplacian() {
  IntMat q(3, 3);
  q.set_row(0, IntVec{Int(5), Int(-3), Int(-2)});
  q.set_row(1, IntVec{Int(-1), Int(3), Int(-2)});
  q.set_row(2, IntVec{Int(-1), Int(-1), Int(2)});
  return q;
}

IntVec example_sigma() { return IntVec{Int(1), Int(2), Int(3)}; }

Lattice example_lattice() {
  IntMat b(2, 3);
  b.set_row(0, IntVec{Int(-1), Int(3), Int(-2)});
  b.set_row(1, IntVec{Int(-1), Int(-1), Int(2)});
  return Lattice::from_basis(b);
}

void BM_Hnf(benchmark::State& state) {
  IntMat m(4, 4);
  m.set_row(0, IntVec{Int(12), Int(-7), Int(3), Int(0)});
  m.set_row(1, IntVec{Int(5), Int(9), Int(-4), Int(2)});
  m.set_row(2, IntVec{Int(-8), Int(6), Int(11), Int(-3)});
  m.set_row(3, IntVec{Int(1), Int(0), Int(-5), Int(10)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(hnf(m));
  }
}
BENCHMARK(BM_Hnf);

void BM_GrobnerEnumeration(benchmark::State& state) {
  IntMat q = example_laplacian();
  IntVec sigma = example_sigma();
  TermOrder order{std::vector<int>{0, 1, 2}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(grobner_basis(q, sigma, order));
  }
}
BENCHMARK(BM_GrobnerEnumeration);

void BM_Superstabilize(benchmark::State& state) {
  IntMat q = example_laplacian();
  IntVec sigma = example_sigma();
  ChipConfig c{Int(0), Int(6), Int(6)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(superstabilize(q, sigma, c));
  }
}
BENCHMARK(BM_Superstabilize);

void BM_Laplacianize(benchmark::State& state) {
  Lattice l = example_lattice();
  for (auto _ : state) {
    benchmark::DoNotOptimize(laplacianize(l));
  }
}
BENCHMARK(BM_Laplacianize);

void BM_Deform(benchmark::State& state) {
  IntMat q = example_laplacian();
  IntVec sigma = example_sigma();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        deform_presentation(to_rat(q), sigma, Rat(1)));
  }
}
BENCHMARK(BM_Deform);

void BM_ScarfLattice(benchmark::State& state) {
  IntMat b(2, 3);
  b.set_row(0, IntVec{Int(-12), Int(39), Int(-27)});
  b.set_row(1, IntVec{Int(-12), Int(-14), Int(26)});
  Lattice l = Lattice::from_basis(b);
  for (auto _ : state) {
    benchmark::DoNotOptimize(scarf_complex_lattice(l));
  }
}
BENCHMARK(BM_ScarfLattice);

}  // namespace

BENCHMARK_MAIN();
