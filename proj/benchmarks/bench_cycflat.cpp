#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "cycflat/binary.hpp"
#include "cycflat/flats.hpp"
#include "cycflat/minors.hpp"
#include "cycflat/zlattice.hpp"

using namespace cycflat;

namespace {

// All 2^k - 1 nonzero columns of F_2^k.
Matroid simplex(int k) {
  std::vector<std::uint64_t> cols;
  for (std::uint64_t v = 1; v < (std::uint64_t{1} << k); ++v) cols.push_back(v);
  return Matroid::from_matrix(BinaryMatrix::from_columns(k, cols));
}

Matroid random_matrix(int k, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> rows(k);
  for (auto& r : rows) r = rng() & SubsetMask::full(n).bits();
  return Matroid::from_matrix(BinaryMatrix(n, rows));
}

const Matroid& griesmer_1145() {
  static const Matroid m = Matroid::from_matrix(
      parse_matrix_text("10001001111\n01001110011\n00101011010\n00010111111"));
  return m;
}

}  // namespace

static void BM_BuildLatticeSimplex(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    // A fresh handle each round so the rank cache starts empty.
    const Matroid m = simplex(k);
    benchmark::DoNotOptimize(build_zlattice(m).size());
  }
}
BENCHMARK(BM_BuildLatticeSimplex)->DenseRange(3, 5);

static void BM_BuildLatticeRandom(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const Matroid m = random_matrix(6, n, 42);
    benchmark::DoNotOptimize(build_zlattice(m).size());
  }
}
BENCHMARK(BM_BuildLatticeRandom)->Arg(12)->Arg(20)->Arg(32);

static void BM_RankColumns(benchmark::State& state) {
  const Matroid m = random_matrix(16, 48, 7);
  std::mt19937_64 rng(1);
  std::vector<SubsetMask> xs(1024);
  for (auto& x : xs) x = SubsetMask(rng() & m.ground().bits());
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank_of_columns(*m.matrix(), xs[i++ % xs.size()]));
  }
}
BENCHMARK(BM_RankColumns);

static void BM_Binarity(benchmark::State& state) {
  const Matroid& m = griesmer_1145();
  const ZLattice l = build_zlattice(m);
  for (auto _ : state) benchmark::DoNotOptimize(is_binary_via_zlattice(m, l).binary);
}
BENCHMARK(BM_Binarity);

static void BM_Codewords(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const Matroid m = random_matrix(k, 40, 3);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_codewords(*m.matrix()).size());
}
BENCHMARK(BM_Codewords)->Arg(8)->Arg(14)->Arg(20);

static void BM_MinorUniform(benchmark::State& state) {
  const Matroid& m = griesmer_1145();
  const ZLattice l = build_zlattice(m);
  std::mt19937_64 rng(5);
  for (auto _ : state) {
    const SubsetMask y(rng() & m.ground().bits());
    const SubsetMask x(rng() & y.bits());
    benchmark::DoNotOptimize(is_minor_uniform(m, l, x, y).is_uniform);
  }
}
BENCHMARK(BM_MinorUniform);

static void BM_GriesmerChain(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(griesmer_chain(griesmer_1145()).size());
}
BENCHMARK(BM_GriesmerChain);

BENCHMARK_MAIN();
