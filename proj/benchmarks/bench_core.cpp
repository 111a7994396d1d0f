#include <benchmark/benchmark.h>

#include "apsum/apsearch.hpp"
#include "apsum/counting.hpp"
#include "apsum/genlab.hpp"
#include "apsum/modring.hpp"

using namespace apsum;

namespace {

// Random subset of Z_M with roughly half the residues.
ResidueSet half_dense(Modulus m, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Residue> members;
  for (Residue x = 0; x < m.value(); ++x) {
    if (rng.below(2) == 0) members.push_back(x);
  }
  return ResidueSet::from_members(m, members);
}

void BM_Sumset(benchmark::State& state) {
  const auto m = Modulus::for_interval(static_cast<std::uint64_t>(state.range(0)));
  const auto a = half_dense(m, 1);
  const auto b = half_dense(m, 2);
  for (auto _ : state) benchmark::DoNotOptimize(sumset(a, b));
}
BENCHMARK(BM_Sumset)->RangeMultiplier(4)->Range(64, 16384);

void BM_Correlation(benchmark::State& state) {
  const auto m = Modulus::for_interval(static_cast<std::uint64_t>(state.range(0)));
  const auto method = state.range(1) == 0 ? CorrelationMethod::direct : CorrelationMethod::ntt;
  const auto a = half_dense(m, 3);
  const auto b = half_dense(m, 4);
  for (auto _ : state) benchmark::DoNotOptimize(cross_correlation(a, b, method));
}
BENCHMARK(BM_Correlation)->ArgsProduct({{64, 256, 1024, 4096}, {0, 1}})->ArgNames({"N", "ntt"});

void BM_SolutionCount(benchmark::State& state) {
  const auto m = Modulus::for_interval(static_cast<std::uint64_t>(state.range(0)));
  const auto k = static_cast<std::size_t>(state.range(1));
  SplitMix64 rng(5);
  const auto c = random_symmetric_set(m, static_cast<std::size_t>(m.value() / 3) | 1U, rng);
  const auto r = difference_representation_counts(c);
  for (auto _ : state) benchmark::DoNotOptimize(ap_weighted_solution_count(r, k));
}
BENCHMARK(BM_SolutionCount)->ArgsProduct({{25, 100, 400}, {3, 4, 8}})->ArgNames({"N", "k"});

void BM_FindKapMod(benchmark::State& state) {
  const auto m = Modulus::for_interval(static_cast<std::uint64_t>(state.range(0)));
  GeneratorSpec spec;
  spec.kind = GeneratorKind::ternary_apfree;
  spec.n = static_cast<std::uint64_t>(state.range(0));
  const auto s = reduce_integers(generate(spec).values(), m);
  for (auto _ : state) benchmark::DoNotOptimize(find_kap_mod(s, 3));
}
BENCHMARK(BM_FindKapMod)->RangeMultiplier(3)->Range(27, 2187);

}  // namespace

BENCHMARK_MAIN();
