#include <benchmark/benchmark.h>

#include "qbc/dct.hpp"
#include "qbc/image.hpp"

namespace {

qbc::GrayImage test_image(int n) { return qbc::synth_image(qbc::SynthKind::Gradient, 0, n, n); }

void BM_forward_serial(benchmark::State& state) {
    const auto img = test_image(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto plane = qbc::reference::forward_quantize_plane(img, 8);
        benchmark::DoNotOptimize(plane);
    }
}

void BM_forward_omp(benchmark::State& state) {
    const auto img = test_image(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto plane = qbc::forward_quantize_plane(img, 8);
        benchmark::DoNotOptimize(plane);
    }
}

void BM_inverse_serial(benchmark::State& state) {
    const auto img = test_image(static_cast<int>(state.range(0)));
    const auto plane = qbc::forward_quantize_plane(img, 8);
    for (auto _ : state) {
        auto recon = qbc::reference::inverse_plane(plane, img.width, img.height, 8);
        benchmark::DoNotOptimize(recon);
    }
}

void BM_inverse_omp(benchmark::State& state) {
    const auto img = test_image(static_cast<int>(state.range(0)));
    const auto plane = qbc::forward_quantize_plane(img, 8);
    for (auto _ : state) {
        auto recon = qbc::inverse_plane(plane, img.width, img.height, 8);
        benchmark::DoNotOptimize(recon);
    }
}

}  // namespace

BENCHMARK(BM_forward_serial)->Arg(512)->Arg(2048);
BENCHMARK(BM_forward_omp)->Arg(512)->Arg(2048);
BENCHMARK(BM_inverse_serial)->Arg(512)->Arg(2048);
BENCHMARK(BM_inverse_omp)->Arg(512)->Arg(2048);

BENCHMARK_MAIN();
