#include <benchmark/benchmark.h>

#include "sfinv/cli/generators.hpp"
#include "sfinv/cli/inputs.hpp"
#include "sfinv/msf.hpp"
#include "sfinv/pieces.hpp"

using namespace sfinv;

namespace {

const char* const group_specs[] = {"cyclic 4 a", "perm a:(0 1) b:(2 3)", "perm a:(0 1 2) b:(0 1)"};

void BM_CyclicClosureBuild(benchmark::State& state) {
  FiniteGroup G = cli::parse_group(group_specs[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(CyclicClosure(G));
  state.SetLabel(G.description());
}
BENCHMARK(BM_CyclicClosureBuild)->DenseRange(0, 2);

void BM_CloseRandomSubgraph(benchmark::State& state) {
  FiniteGroup G = cli::parse_group(group_specs[state.range(0)]);
  CyclicClosure closure(G);
  gen::Rng rng(1);
  std::vector<Subgraph> inputs;
  for (int k = 0; k < 256; ++k) inputs.push_back(gen::random_subgraph(rng, G));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(closure.close(inputs[i++ % inputs.size()]));
  state.SetLabel(G.description());
}
BENCHMARK(BM_CloseRandomSubgraph)->DenseRange(0, 2);

void BM_EnumerateExpansion(benchmark::State& state) {
  FiniteGroup G = cli::parse_group(group_specs[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_mm(G));
  state.SetLabel(G.description());
}
BENCHMARK(BM_EnumerateExpansion)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_VerifyPre1(benchmark::State& state) {
  FiniteGroup G = cli::parse_group(group_specs[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(verify_pre1(G));
  state.SetLabel(G.description());
}
BENCHMARK(BM_VerifyPre1)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_StephenApproximant(benchmark::State& state) {
  Presentation P = cli::make_presentation({"abAB"}, "");
  for (auto _ : state) benchmark::DoNotOptimize(approximant(P, Word{}, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_StephenApproximant)->DenseRange(1, 4);

void BM_DecidePieces(benchmark::State& state) {
  Word w = parse_word("ab", Alphabet("ab")).power(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    PieceContext ctx(Presentation(Alphabet("ab"), {w}), StephenBudget{});
    benchmark::DoNotOptimize(decide_strongly_f_inverse(ctx));
  }
}
BENCHMARK(BM_DecidePieces)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_PinjCompose(benchmark::State& state) {
  gen::Rng rng(2);
  std::vector<StructuredPinj> maps;
  for (int k = 0; k < 64; ++k) maps.push_back(gen::random_pinj(rng));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(compose(maps[i % 64], maps[(i + 1) % 64]));
    ++i;
  }
}
BENCHMARK(BM_PinjCompose);

void BM_PinjEquals(benchmark::State& state) {
  gen::Rng rng(3);
  std::vector<StructuredPinj> maps;
  for (int k = 0; k < 64; ++k) maps.push_back(gen::random_pinj(rng));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(equals(compose(maps[i % 64], invert_pinj(maps[i % 64])), domain_idempotent(maps[i % 64])));
    ++i;
  }
}
BENCHMARK(BM_PinjEquals);

}  // namespace

BENCHMARK_MAIN();
