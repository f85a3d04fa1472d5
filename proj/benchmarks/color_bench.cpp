#include <acolor/driver.hpp>
#include <acolor/generators.hpp>

#include <benchmark/benchmark.h>

namespace {

void color_triangulation(benchmark::State & state)
{
    auto g = acolor::random_triangulation(static_cast<int>(state.range(0)), 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(acolor::color_graph(g).colors_used);
    state.counters["edges"] = static_cast<double>(g.edge_count());
    state.SetComplexityN(state.range(0));
}
BENCHMARK(color_triangulation)->RangeMultiplier(2)->Range(16, 1024)->Complexity()->Unit(benchmark::kMillisecond);

void color_grid(benchmark::State & state)
{
    auto side = static_cast<int>(state.range(0));
    auto g = acolor::grid_graph(side, side);
    for (auto _ : state)
        benchmark::DoNotOptimize(acolor::color_graph(g).colors_used);
}
BENCHMARK(color_grid)->Arg(5)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void color_wheel(benchmark::State & state)
{
    auto g = acolor::wheel_graph(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(acolor::color_graph(g).colors_used);
}
BENCHMARK(color_wheel)->Arg(10)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void plan_only(benchmark::State & state)
{
    auto g = acolor::random_triangulation(static_cast<int>(state.range(0)), 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(acolor::plan_reduction(g).size());
}
BENCHMARK(plan_only)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

}
