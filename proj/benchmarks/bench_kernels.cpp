// Microbenchmarks for the rank kernels and the degreewise engines. The
// s = r = 1 slices are the hot path: 2^m columns at degree m.

#include <benchmark/benchmark.h>

#include "lcsb2/forms.hpp"
#include "lcsb2/lcs.hpp"
#include "lcsb2/series.hpp"

using namespace lcsb2;

namespace {

void BM_L2Rank(benchmark::State& state) {
    const long long m = state.range(0);
    for (auto _ : state) {
        SpanCache cache(Grading(1, 1));
        SparseEchelon ech(cache.context(m).size());
        cache.stream_l2(m, [&ech](SparseVec v) { ech.insert(std::move(v)); });
        benchmark::DoNotOptimize(ech.rank());
    }
}
BENCHMARK(BM_L2Rank)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_L3RankExact(benchmark::State& state) {
    const long long m = state.range(0);
    for (auto _ : state) {
        SpanCache cache(Grading(1, 1));
        SparseEchelon ech(cache.context(m).size());
        cache.stream_l3(m, [&ech](SparseVec v) { ech.insert(std::move(v)); });
        benchmark::DoNotOptimize(ech.rank());
    }
}
BENCHMARK(BM_L3RankExact)->Arg(8)->Arg(10)->Arg(11)->Unit(benchmark::kMillisecond);

void BM_L3RankModular(benchmark::State& state) {
    const long long m = state.range(0);
    const std::uint64_t p = random_prime62(1);
    for (auto _ : state) {
        SpanCache cache(Grading(1, 1));
        ModularEchelon ech(cache.context(m).size(), p);
        cache.stream_l3(m, [&ech](SparseVec v) { ech.insert(v); });
        benchmark::DoNotOptimize(ech.rank());
    }
}
BENCHMARK(BM_L3RankModular)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_QuotientReport(benchmark::State& state) {
    const long long m = state.range(0);
    NcPoly P = ncpoly_from_json(R"({"xx":"1","yy":"-1"})");
    for (auto _ : state) {
        B2Engine base(Grading(1, 1));
        QuotientEngine engine(base, P);
        benchmark::DoNotOptimize(engine.report(m).dim_B2);
    }
}
BENCHMARK(BM_QuotientReport)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_PhiRank(benchmark::State& state) {
    const long long m = state.range(0);
    NcPoly P = ncpoly_from_json(R"({"xx":"1","yy":"-1"})");
    Grading g(1, 1);
    for (auto _ : state) benchmark::DoNotOptimize(phi_rank(P, g, m));
}
BENCHMARK(BM_PhiRank)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_ClosedFormSeries(benchmark::State& state) {
    Grading g(2, 3);
    for (auto _ : state) benchmark::DoNotOptimize(closed_form_hp(g, 6, state.range(0)));
}
BENCHMARK(BM_ClosedFormSeries)->Arg(40)->Arg(200);

} // namespace

BENCHMARK_MAIN();
