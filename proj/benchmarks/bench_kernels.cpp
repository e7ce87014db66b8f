// Serial scan against the chunked parallel scan on the workloads the
// checkers actually run: all-pass sweeps (the common case, where the whole
// space must be visited) and early-hit sweeps (where the violation sits at a
// known depth and the parallel scan must still report the least index).

#include <benchmark/benchmark.h>

#include <cstdint>

#include "drckit/kernels.hpp"

namespace {

// The target lives outside the optimizer's view so the scan below cannot be
// folded away; no 16 bit mask ever reaches it, so the sweep never hits.
volatile uint64_t g_target = 0x10000u;

void bench_serial_all_pass(benchmark::State& state) {
    const long long total = state.range(0);
    const uint64_t target = g_target;
    auto bad = [target](long long i) {
        uint64_t x = static_cast<uint64_t>(i) * 0x9e3779b97f4a7c15ull;
        x ^= x >> 29;
        return (x & 0xffffu) == target;
    };
    for (auto _ : state) {
        benchmark::DoNotOptimize(drckit::first_violation_serial(total, bad));
    }
    state.SetItemsProcessed(state.iterations() * total);
}

void bench_parallel_all_pass(benchmark::State& state) {
    const long long total = state.range(0);
    const uint64_t target = g_target;
    auto bad = [target](long long i) {
        uint64_t x = static_cast<uint64_t>(i) * 0x9e3779b97f4a7c15ull;
        x ^= x >> 29;
        return (x & 0xffffu) == target;
    };
    for (auto _ : state) {
        benchmark::DoNotOptimize(drckit::first_violation_parallel(total, bad));
    }
    state.SetItemsProcessed(state.iterations() * total);
}

void bench_serial_early_hit(benchmark::State& state) {
    const long long total = state.range(0);
    const long long hit = total / 2;
    auto bad = [hit](long long i) { return i >= hit; };
    for (auto _ : state) {
        benchmark::DoNotOptimize(drckit::first_violation_serial(total, bad));
    }
}

void bench_parallel_early_hit(benchmark::State& state) {
    const long long total = state.range(0);
    const long long hit = total / 2;
    auto bad = [hit](long long i) { return i >= hit; };
    for (auto _ : state) {
        benchmark::DoNotOptimize(drckit::first_violation_parallel(total, bad));
    }
}

}  // namespace

BENCHMARK(bench_serial_all_pass)->Arg(1 << 16)->Arg(1 << 20)->Arg(1 << 24);
BENCHMARK(bench_parallel_all_pass)->Arg(1 << 16)->Arg(1 << 20)->Arg(1 << 24);
BENCHMARK(bench_serial_early_hit)->Arg(1 << 20)->Arg(1 << 24);
BENCHMARK(bench_parallel_early_hit)->Arg(1 << 20)->Arg(1 << 24);

BENCHMARK_MAIN();
