// Serial vs OpenMP kernels on a de Sitter chart. Arg 0 = serial, 1 = parallel.
#include "causalcoh/calabi.hpp"
#include "causalcoh/young.hpp"

#include <benchmark/benchmark.h>

using namespace causalcoh;
using tensor::Chart;
using tensor::Exec;

namespace {

const Chart& chart() {
    static const Chart c = Chart::de_sitter(4, 1);
    return c;
}

Exec exec_of(const benchmark::State& s) { return s.range(0) == 0 ? Exec::serial : Exec::parallel; }

void BM_Nabla(benchmark::State& state) {
    Rng rng(1);
    const auto r = calabi::random_field(4, 2, rng, 2);
    for (auto _ : state) benchmark::DoNotOptimize(tensor::nabla(chart(), r.tensor(), exec_of(state)));
}

void BM_Box(benchmark::State& state) {
    Rng rng(2);
    const auto h = calabi::random_field(4, 1, rng, 2);
    for (auto _ : state) benchmark::DoNotOptimize(tensor::box_tensor(chart(), h.tensor(), exec_of(state)));
}

void BM_Project(benchmark::State& state) {
    Rng rng(3);
    const auto d = calabi::level_diagram(3);
    const auto t = tensor::random_polynomial_tensor(4, d.cells(), rng, 2, 6);
    for (auto _ : state) benchmark::DoNotOptimize(tensor::project(t, d, exec_of(state)));
}

void BM_B4(benchmark::State& state) {
    Rng rng(4);
    const auto b = calabi::random_field(4, 3, rng, 2);
    for (auto _ : state) benchmark::DoNotOptimize(calabi::B(chart(), 4, b, exec_of(state)));
}

}  // namespace

BENCHMARK(BM_Nabla)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Box)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Project)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_B4)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
