// Parallel kernels against their serial references.

#include "sltk/lawlor.hpp"
#include "sltk/spectrum.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_SpectrumParallel(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const auto cutoff = state.range(1);
    for (auto _ : state) benchmark::DoNotOptimize(sltk::spectrum::enumerate_spectrum(m, cutoff));
}

void BM_SpectrumSerial(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const auto cutoff = state.range(1);
    for (auto _ : state) benchmark::DoNotOptimize(sltk::spectrum::enumerate_spectrum_serial(m, cutoff));
}

void BM_NeckParallel(benchmark::State& state) {
    sltk::lawlor::NeckParams p{3, {1.0, 2.0, 0.5}};
    sltk::lawlor::NeckSampling s;
    s.sampleCount = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sltk::lawlor::verify_sl_neck(p, s));
}

void BM_NeckSerial(benchmark::State& state) {
    sltk::lawlor::NeckParams p{3, {1.0, 2.0, 0.5}};
    sltk::lawlor::NeckSampling s;
    s.sampleCount = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sltk::lawlor::verify_sl_neck_serial(p, s));
}

}  // namespace

BENCHMARK(BM_SpectrumParallel)->Args({6, 200})->Args({8, 120})->Args({12, 48})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SpectrumSerial)->Args({6, 200})->Args({8, 120})->Args({12, 48})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NeckParallel)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NeckSerial)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
