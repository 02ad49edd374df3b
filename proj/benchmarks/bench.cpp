// Throughput of the counting engines and the closed forms.  Build with the
// default Release flags; run ./ballotpath_bench from the build tree.
#include <benchmark/benchmark.h>

#include <string>

#include "ballotpath/closed_form.hpp"
#include "ballotpath/methods.hpp"
#include "ballotpath/oracle.hpp"
#include "ballotpath/pattern.hpp"
#include "ballotpath/recurrence.hpp"

using namespace ballot;

namespace {

void bm_dp_grid(benchmark::State& state) {
    Pattern p = parse_pattern("urruurr");
    const int extent = static_cast<int>(state.range(0));
    for (auto _ : state) {
        CountGrid g = dp_grid(p, 0, extent, extent);
        benchmark::DoNotOptimize(g.at(extent, extent));
    }
}
BENCHMARK(bm_dp_grid)->Arg(16)->Arg(32)->Arg(64);

void bm_dp_long_pattern(benchmark::State& state) {
    Pattern p = parse_pattern(std::string(static_cast<std::size_t>(state.range(0)), 'r') + "u");
    for (auto _ : state) {
        CountGrid g = dp_grid(p, 0, 40, 40);
        benchmark::DoNotOptimize(g.at(40, 40));
    }
}
BENCHMARK(bm_dp_long_pattern)->Arg(4)->Arg(8)->Arg(16);

void bm_exhaustive(benchmark::State& state) {
    Pattern p = parse_pattern("ruur");
    const int steps = static_cast<int>(state.range(0));
    for (auto _ : state) {
        CountGrid g = exhaustive_grid(p, 1, steps);
        benchmark::DoNotOptimize(g.at(0, 0));
    }
}
BENCHMARK(bm_exhaustive)->Arg(12)->Arg(16)->Arg(20);

void bm_table_ra_extended(benchmark::State& state) {
    const int extent = static_cast<int>(state.range(0));
    for (auto _ : state) {
        CountTable t = table_ra(4, 5, extent, extent, true);
        benchmark::DoNotOptimize(t.at(extent, 0));
    }
}
BENCHMARK(bm_table_ra_extended)->Arg(16)->Arg(48);

void bm_table_bifix1(benchmark::State& state) {
    PatternProfile prof = classify(parse_pattern("urruurr"));
    const int extent = static_cast<int>(state.range(0));
    for (auto _ : state) {
        CountTable t = table_bifix1(prof, extent, extent);
        benchmark::DoNotOptimize(t.at(extent, extent));
    }
}
BENCHMARK(bm_table_bifix1)->Arg(16)->Arg(48);

void bm_table_depth_positive(benchmark::State& state) {
    PatternProfile prof = classify(parse_pattern("rrruuurrruu"));
    const int extent = static_cast<int>(state.range(0));
    for (auto _ : state) {
        CountTable t = table_depth_positive(prof, extent, extent);
        benchmark::DoNotOptimize(t.at(extent, extent));
    }
}
BENCHMARK(bm_table_depth_positive)->Arg(16)->Arg(48);

void bm_bifix1_s(benchmark::State& state) {
    PatternProfile prof = classify(parse_pattern("urruurr"));
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Count v = bifix1_s(prof, n, n);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(bm_bifix1_s)->Arg(8)->Arg(16)->Arg(32);

void bm_depth2_example_s(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Count v = depth2_example_s(n, 1);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(bm_depth2_example_s)->Arg(8)->Arg(12)->Arg(16);

void bm_ra_boundary(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Count v = ra_boundary(4, 5, n);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(bm_ra_boundary)->Arg(16)->Arg(64);

void bm_count_auto(benchmark::State& state) {
    PatternProfile prof = classify(parse_pattern("urruurr"));
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Count v = count_auto(prof, n, n, 0);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(bm_count_auto)->Arg(8)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
