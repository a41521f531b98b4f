#include <benchmark/benchmark.h>

#include "diagramma/combination.hpp"
#include "diagramma/graph_product.hpp"
#include "diagramma/pvt.hpp"
#include "diagramma/random.hpp"

using namespace diagramma;

namespace {

Diagram sample_loop(std::int64_t steps) {
  auto rng = sample_rng(1, static_cast<std::uint64_t>(steps));
  auto p = share(random_presentation(rng, 3, 3));
  return random_loop(rng, p, random_word(rng, *p, 3), static_cast<std::size_t>(steps));
}

void BM_Reduce(benchmark::State& state) {
  const auto d = sample_loop(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reduce(d));
  state.counters["transistors"] = static_cast<double>(d.transistor_count());
}
BENCHMARK(BM_Reduce)->RangeMultiplier(4)->Range(8, 2048);

void BM_CanonicalForm(benchmark::State& state) {
  const auto d = sample_loop(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(d));
  state.counters["transistors"] = static_cast<double>(d.transistor_count());
}
BENCHMARK(BM_CanonicalForm)->RangeMultiplier(4)->Range(8, 2048);

void BM_GPNormalForm(benchmark::State& state) {
  auto rng = sample_rng(2, 0);
  GPContext ctx(random_graph(rng, 12, 0.5), false);
  const auto w = random_gp_word(rng, 12, static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(gp_normal_form(ctx, w));
}
BENCHMARK(BM_GPNormalForm)->RangeMultiplier(4)->Range(16, 4096);

void BM_ThetaRoundTrip(benchmark::State& state) {
  auto rng = sample_rng(3, 0);
  GPContext ctx(random_graph(rng, 6, 0.5));
  const auto w = random_gp_word(rng, 6, static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(theta_inverse(ctx, theta(ctx, w)));
}
BENCHMARK(BM_ThetaRoundTrip)->RangeMultiplier(2)->Range(4, 64);

void BM_RaagEmbedding(benchmark::State& state) {
  auto rng = sample_rng(4, 0);
  const auto g = random_graph(rng, 5, 0.5);
  const auto w = random_gp_word(rng, 5, static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(reduce(raag_to_diagram_group(g, w)));
}
BENCHMARK(BM_RaagEmbedding)->RangeMultiplier(2)->Range(4, 32);

void BM_PvtWordProblem(benchmark::State& state) {
  auto rng = sample_rng(5, 0);
  const auto w = random_lambda_word(rng, 5, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_trivial(lambda_to_diagram(w)));
}
BENCHMARK(BM_PvtWordProblem)->RangeMultiplier(4)->Range(8, 512);

}  // namespace
BENCHMARK_MAIN();
