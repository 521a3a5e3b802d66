#include <benchmark/benchmark.h>

#include "lsawb/catalog.hpp"
#include "lsawb/cohomology.hpp"
#include "lsawb/matrix.hpp"
#include "lsawb/mu.hpp"
#include "lsawb/radicals.hpp"
#include "lsawb/simplicity.hpp"
#include "lsawb/trees.hpp"

using namespace lsawb;

namespace {

Matrix random_matrix(std::size_t n, std::uint64_t seed) {
  SampleSource src(seed);
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = Scalar(src.integer(-9, 9));
  return m;
}

void BM_Rref(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(16)->Arg(32);

void BM_IsSimple(benchmark::State& state) {
  const auto a = incomplete_simple(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_simple(a));
}
BENCHMARK(BM_IsSimple)->Arg(3)->Arg(6)->Arg(10);

void BM_RadicalTower(benchmark::State& state) {
  const auto a = catalog_algebra("rad-not-ideal-4d");
  for (auto _ : state) benchmark::DoNotOptimize(radical_tower(a));
}
BENCHMARK(BM_RadicalTower);

void BM_RadicalTowerHelmstetter(benchmark::State& state) {
  const auto b = helmstetter_extension(catalog_algebra("dim2-simple"));
  for (auto _ : state) benchmark::DoNotOptimize(radical_tower(b));
}
BENCHMARK(BM_RadicalTowerHelmstetter);

void BM_LsaCohomology(benchmark::State& state) {
  const auto a = catalog_algebra("A_2");
  const auto p = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lsa_cohomology(a, p));
}
BENCHMARK(BM_LsaCohomology)->Arg(1)->Arg(2)->Arg(3);

void BM_EnumerateTrees(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_trees(m));
}
BENCHMARK(BM_EnumerateTrees)->DenseRange(4, 8, 2);

void BM_MuTable(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(MuTable(n));
}
BENCHMARK(BM_MuTable)->Arg(30)->Arg(120);

void BM_AsymptoticBounds(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(asymptotic_bounds_check(1, 60));
}
BENCHMARK(BM_AsymptoticBounds)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
