#include <benchmark/benchmark.h>

#include <random>

#include "zk/grouphom.hpp"
#include "zk/liehomology.hpp"
#include "zk/resolution.hpp"
#include "zk/weylmod.hpp"

namespace {

zk::IntMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> e(-9, 9);
  zk::IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = e(rng);
  return a;
}

void BM_SmithDivisors(benchmark::State& state) {
  const auto a = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(zk::smith_divisors(a));
}
BENCHMARK(BM_SmithDivisors)->Arg(10)->Arg(20)->Arg(40)->Arg(80);

void BM_SmithForm(benchmark::State& state) {
  const auto a = random_matrix(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(zk::smith_form(a));
}
BENCHMARK(BM_SmithForm)->Arg(10)->Arg(20)->Arg(40);

void BM_MinimalLattice(benchmark::State& state) {
  const zk::LieAlgebraZ g = zk::build_algebra(zk::RootDatum::parse("gsp:4"));
  const zk::Weight lambda{state.range(0), state.range(1), (state.range(0) + state.range(1)) % 2};
  for (auto _ : state) benchmark::DoNotOptimize(zk::minimal_lattice(g, lambda));
}
BENCHMARK(BM_MinimalLattice)->Args({2, 1})->Args({4, 2})->Args({6, 3});

void BM_KostantBorel(benchmark::State& state) {
  const zk::LieAlgebraZ g = zk::build_algebra(zk::RootDatum::parse("gsp:4"));
  const zk::ParabolicData borel = zk::ParabolicData::parse(g.datum(), "[]");
  const zk::Weight lambda{state.range(0), state.range(1), (state.range(0) + state.range(1)) % 2};
  for (auto _ : state) benchmark::DoNotOptimize(zk::kostant_check(g, borel, lambda, std::nullopt));
}
BENCHMARK(BM_KostantBorel)->Args({2, 1})->Args({4, 2});

void BM_ResolutionCertificate(benchmark::State& state) {
  const zk::LieAlgebraZ g = zk::build_algebra(zk::RootDatum::parse(state.range(0) ? "gsp:4" : "gl:3"));
  const zk::ParabolicData borel = zk::ParabolicData::parse(g.datum(), "[]");
  const zk::PolyZGroup gamma = zk::build_group(zk::parabolic_split(g, borel));
  for (auto _ : state) {
    zk::FreeResolution f(gamma);
    benchmark::DoNotOptimize(f.certify(1));
  }
}
BENCHMARK(BM_ResolutionCertificate)->Arg(0)->Arg(1);

void BM_GroupHomology(benchmark::State& state) {
  const zk::LieAlgebraZ g = zk::build_algebra(zk::RootDatum::parse("gsp:4"));
  const zk::ParabolicData pd = zk::ParabolicData::parse(g.datum(), "[]");
  const zk::Weight lambda{2, 1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(zk::degeneration_check(g, pd, lambda, 7));
}
BENCHMARK(BM_GroupHomology)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
