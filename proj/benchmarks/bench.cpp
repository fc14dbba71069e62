#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "facering/classify.hpp"
#include "facering/corpus.hpp"
#include "facering/face_ring.hpp"
#include "facering/inj_complex.hpp"
#include "facering/linalg.hpp"

using namespace facering;

namespace {

template <class F>
SparseMatrix<F> random_matrix(const F& f, std::size_t n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution keep(density);
  std::uniform_int_distribution<int> val(-5, 5);
  SparseMatrix<F> m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (keep(rng)) m.set(r, c, f.from_int(val(rng)));
  return m;
}

const char* kPivotNames[] = {"first_nonzero", "markowitz"};

template <class F>
void rank_random(benchmark::State& state, const F& f) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto rule = state.range(1) == 0 ? PivotRule::kFirstNonzero : PivotRule::kMarkowitz;
  const auto m = random_matrix(f, n, 0.05, 42);
  for (auto _ : state) benchmark::DoNotOptimize(rank(f, m, {rule, EliminationPath::kSparse}));
  state.SetLabel(kPivotNames[state.range(1)]);
}

void BM_RankRational(benchmark::State& state) { rank_random(state, RationalField{}); }
void BM_RankGF2(benchmark::State& state) { rank_random(state, PrimeField(2)); }
BENCHMARK(BM_RankRational)->ArgsProduct({{50, 100, 200}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankGF2)->ArgsProduct({{50, 100, 200}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_LocalCohomologyTable(benchmark::State& state, const std::string& name, FieldSpec field) {
  const auto p = corpus_poset(name);
  for (auto _ : state) benchmark::DoNotOptimize(local_cohomology_table(p, field));
}
BENCHMARK_CAPTURE(BM_LocalCohomologyTable, rp2_rational, "rp2_six_vertex", FieldSpec::rational())
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_LocalCohomologyTable, rp2_gf2, "rp2_six_vertex", FieldSpec::gf(2))
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_LocalCohomologyTable, boolean4, "boolean:4", FieldSpec::rational())
    ->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state, const std::string& name, FieldSpec field) {
  const auto p = corpus_poset(name);
  for (auto _ : state) benchmark::DoNotOptimize(classify(p, field));
}
BENCHMARK_CAPTURE(BM_Classify, rp2_gf2, "rp2_six_vertex", FieldSpec::gf(2))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Classify, glued3, "glued_simplices:3", FieldSpec::rational())
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Classify, cone_rp2, "cone:rp2_six_vertex", FieldSpec::rational())
    ->Unit(benchmark::kMillisecond);

void BM_DoubleDual(benchmark::State& state) {
  const RationalField q;
  const auto p = corpus_poset("rp2_six_vertex");
  const auto j = dualizing_complex(q, p);
  for (auto _ : state) benchmark::DoNotOptimize(dd(q, p, dd(q, p, j)));
}
BENCHMARK(BM_DoubleDual)->Unit(benchmark::kMillisecond);

void BM_Straighten(benchmark::State& state) {
  const auto p = corpus_poset("rp2_six_vertex");
  GeneratorWord w;
  for (ElementId a : p.atoms()) w.push_back(a);
  for (auto _ : state) benchmark::DoNotOptimize(straighten_integral(p, w));
}
BENCHMARK(BM_Straighten)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
