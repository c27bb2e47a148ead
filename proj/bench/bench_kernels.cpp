#include <benchmark/benchmark.h>

#include "lqc/bounds.hpp"
#include "lqc/embed.hpp"

using namespace lqc;

namespace {

struct CosetInstance {
  std::vector<BitVector> kernel, image;
};

CosetInstance toric_instance(int L) {
  auto c = toric_code(2, L);
  return {nullspace_basis(c.h1), c.h2.row_vectors()};
}

void coset_parallel(benchmark::State& state) {
  auto inst = toric_instance(static_cast<int>(state.range(0)));
  SearchBudget b;
  b.exact_qubits = 64;
  b.exact_log2 = 40;
  for (auto _ : state) benchmark::DoNotOptimize(min_coset_weight(inst.kernel, inst.image, b));
}

void coset_serial(benchmark::State& state) {
  auto inst = toric_instance(static_cast<int>(state.range(0)));
  SearchBudget b;
  b.exact_qubits = 64;
  b.exact_log2 = 40;
  b.parallel = false;
  for (auto _ : state) benchmark::DoNotOptimize(min_coset_weight_serial(inst.kernel, inst.image, b));
}

const EmbeddedComplex& cycle_embedding() {
  static const EmbeddedComplex e = [] {
    EmbedParams p;
    p.n = 2;
    p.seed = 7;
    return gg_embed(cycle_complex(64), p);
  }();
  return e;
}

void coarse_parallel(benchmark::State& state) {
  const auto& e = cycle_embedding();
  for (auto _ : state) benchmark::DoNotOptimize(certify_coarse(e.complex(), e.coords));
}

void coarse_serial(benchmark::State& state) {
  const auto& e = cycle_embedding();
  for (auto _ : state) benchmark::DoNotOptimize(certify_coarse_serial(e.complex(), e.coords));
}

void local_parallel(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  auto c = toric_code(2, L);
  auto p = fold_torus(2, L);
  for (auto _ : state) benchmark::DoNotOptimize(certify_local(c, p));
}

void local_serial(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  auto c = toric_code(2, L);
  auto p = fold_torus(2, L);
  for (auto _ : state) benchmark::DoNotOptimize(certify_local_serial(c, p));
}

void survey_toric(benchmark::State& state) {
  SurveySpec s;
  for (int L = 3; L <= 12; ++L) s.params.push_back(L);
  for (auto _ : state) benchmark::DoNotOptimize(frontier_survey(s));
}

}  // namespace

BENCHMARK(coset_parallel)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(coset_serial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(coarse_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(coarse_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(local_parallel)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(local_serial)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(survey_toric)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
