#include <uivd/harness.hpp>
#include <uivd/oracle.hpp>
#include <uivd/reduction.hpp>

#include <benchmark/benchmark.h>
#include <spdlog/spdlog.h>

using namespace uivd;

namespace {

Graph instance(std::int64_t n, std::size_t noise)
{
    return generate_instance({.n = static_cast<std::size_t>(n), .noise = noise, .seed = 7});
}

void BM_Recognize(benchmark::State& state)
{
    Graph g = instance(state.range(0), 0);
    for (auto _ : state)
        benchmark::DoNotOptimize(recognize(g));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Recognize)->RangeMultiplier(2)->Range(128, 4096)->Complexity();

void BM_Approximate(benchmark::State& state)
{
    Graph g = instance(state.range(0), 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(approximate(g));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Approximate)->RangeMultiplier(2)->Range(128, 2048)->Complexity();

void BM_Kernelize(benchmark::State& state)
{
    Instance inst(instance(state.range(0), 2), 2);
    std::size_t kernel_n = 0;
    for (auto _ : state) {
        KernelizeResult r = kernelize(inst);
        kernel_n = r.stats.kernel_n;
        benchmark::DoNotOptimize(kernel_n);
    }
    state.counters["kernel_n"] = static_cast<double>(kernel_n);
}
BENCHMARK(BM_Kernelize)->RangeMultiplier(2)->Range(100, 800)->Unit(benchmark::kMillisecond);

void BM_Separator(benchmark::State& state)
{
    Graph g = instance(state.range(0), 0);
    auto r = recognize(g);
    const auto& order = std::get<UnitIntervalCertificate>(r).ordering.order;
    VertexId u = order.front(), v = order.back();
    if (g.adjacent(u, v)) {
        state.SkipWithError("endpoints adjacent");
        return;
    }
    for (auto _ : state)
        benchmark::DoNotOptimize(min_vertex_separator(g, u, v));
}
BENCHMARK(BM_Separator)->RangeMultiplier(4)->Range(64, 4096);

void BM_Oracle(benchmark::State& state)
{
    Instance inst(generate_instance({.n = 14, .noise = 3, .seed = 11, .span_ratio = 0.5}),
                  static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle_solve(inst));
}
BENCHMARK(BM_Oracle)->DenseRange(0, 3);

} // namespace
int main(int argc, char** argv)
{
    spdlog::set_level(spdlog::level::warn);
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv))
        return 1;
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
