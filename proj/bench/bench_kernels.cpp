#include <benchmark/benchmark.h>

#include <vector>

#include "tropcore/corpus.hpp"
#include "tropcore/kernels.hpp"
#include "tropcore/random.hpp"

using namespace tropcore;

namespace {

Matrix bench_matrix(std::size_t n) {
  Rng rng(42);
  return random_matrix(rng, n, 0.8, EntryDistribution{20, 4});
}

void BM_MultiplySerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = bench_matrix(n);
  std::vector<Scalar> out(n * n);
  for (auto _ : state) {
    kernels::serial::multiply(kMaxPlus, n, a.data(), a.data(), out);
    benchmark::DoNotOptimize(out.data());
  }
}

void BM_MultiplyParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = bench_matrix(n);
  std::vector<Scalar> out(n * n);
  for (auto _ : state) {
    kernels::parallel::multiply(kMaxPlus, n, a.data(), a.data(), out);
    benchmark::DoNotOptimize(out.data());
  }
}

std::vector<Scalar> closure_input(std::size_t n) {
  const Matrix a = bench_matrix(n);
  std::vector<Scalar> d(a.data().begin(), a.data().end());
  for (auto& x : d)
    if (x.is_finite()) x = Scalar(mpq_class(x.value() - 20));
  return d;
}

void BM_ClosureSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto input = closure_input(n);
  for (auto _ : state) {
    auto d = input;
    benchmark::DoNotOptimize(kernels::serial::closure(kMaxPlus, n, d));
  }
}

void BM_ClosureParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto input = closure_input(n);
  for (auto _ : state) {
    auto d = input;
    benchmark::DoNotOptimize(kernels::parallel::closure(kMaxPlus, n, d));
  }
}

void BM_Corpus(benchmark::State& state) {
  CorpusConfig c;
  c.count = 32;
  c.n = 4;
  c.parallel = state.range(0) != 0;
  c.shrink = false;
  const auto matrices = generate_corpus(c);
  for (auto _ : state) {
    auto r = run_matrices(matrices, c.verify, c.parallel, false);
    benchmark::DoNotOptimize(r.entries.data());
  }
}

}  // namespace

BENCHMARK(BM_MultiplySerial)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultiplyParallel)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ClosureSerial)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClosureParallel)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Corpus)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
