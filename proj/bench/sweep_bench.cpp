#include <benchmark/benchmark.h>

#include "d4shear/report.hpp"

namespace {

using d4shear::par::Execution;
namespace v = d4shear::verify;

template <v::SweepResult (*Sweep)(std::uint64_t, std::size_t, Execution)>
void run(benchmark::State& state) {
  const auto exec = state.range(0) == 0 ? Execution::serial : Execution::parallel;
  const auto n = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(Sweep(1, n, exec));
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * n));
  state.SetLabel(exec == Execution::serial ? "serial" : "parallel");
}

// Args: (0 = serial, 1 = parallel), sample count.
BENCHMARK(run<v::sweep_ks_bracket>)->Name("ks_bracket")->Args({0, 200})->Args({1, 200});
BENCHMARK(run<v::sweep_eg_agreement>)->Name("eg_agreement")->Args({0, 100})->Args({1, 100});
BENCHMARK(run<v::sweep_cubic_membership>)->Name("cubic_membership")->Args({0, 100})->Args({1, 100});
BENCHMARK(run<v::sweep_skein>)->Name("skein")->Args({0, 1000})->Args({1, 1000});
BENCHMARK(run<v::sweep_matrix_braid>)->Name("matrix_braid")->Args({0, 200})->Args({1, 200});
BENCHMARK(run<v::sweep_braid_shear>)->Name("braid_shear")->Args({0, 100})->Args({1, 100});

}  // namespace

BENCHMARK_MAIN();
