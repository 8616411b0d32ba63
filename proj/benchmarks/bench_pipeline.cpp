#include <benchmark/benchmark.h>

#include "fspi/dewatermark.hpp"
#include "fspi/metrics.hpp"
#include "fspi/recon.hpp"
#include "fspi/scenes.hpp"
#include "fspi/stego.hpp"
#include "fspi/watermark.hpp"

using namespace fspi;

namespace {

std::size_t side(const benchmark::State& state) { return static_cast<std::size_t>(state.range(0)); }

void BM_BuildPlan(benchmark::State& state) {
  const std::size_t n = side(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_plan(PatternMode::FourStepSinusoid, n, n, Sampling::full()));
  }
}
BENCHMARK(BM_BuildPlan)->Arg(32)->Arg(64)->Arg(128);

void BM_Measure(benchmark::State& state) {
  const std::size_t n = side(state);
  const auto plan = build_plan(PatternMode::FourStepSinusoid, n, n, Sampling::full());
  const Image scene = make_scene("peppers", n, n);
  for (auto _ : state) benchmark::DoNotOptimize(measure(scene, plan));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(plan.size()));
}
BENCHMARK(BM_Measure)->Arg(32)->Arg(64)->Arg(128);

void BM_MeasureNoisy(benchmark::State& state) {
  const std::size_t n = side(state);
  const auto plan = build_plan(PatternMode::FourStepSinusoid, n, n, Sampling::full());
  const Image scene = make_scene("peppers", n, n);
  for (auto _ : state) benchmark::DoNotOptimize(measure(scene, plan, NoiseModel::gaussian(30.0, 1)));
}
BENCHMARK(BM_MeasureNoisy)->Arg(64);

void BM_AssembleReconstruct(benchmark::State& state) {
  const std::size_t n = side(state);
  const auto plan = build_plan(PatternMode::FourStepSinusoid, n, n, Sampling::half_spectrum());
  const auto seq = measure(make_scene("peppers", n, n), plan);
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct_image(seq, plan));
}
BENCHMARK(BM_AssembleReconstruct)->Arg(32)->Arg(64)->Arg(128)->Arg(256);

void BM_InverseTransform(benchmark::State& state) {
  const std::size_t n = side(state);
  const auto plan = build_plan(PatternMode::FourStepSinusoid, n, n, Sampling::full());
  const auto spec = assemble_spectrum(measure(make_scene("blobs", n, n), plan), plan);
  for (auto _ : state) benchmark::DoNotOptimize(inverse_transform(spec));
}
BENCHMARK(BM_InverseTransform)->Arg(64)->Arg(128)->Arg(256);

void BM_HadamardReconstruct(benchmark::State& state) {
  const std::size_t n = side(state);
  const auto plan = build_plan(PatternMode::HadamardDiff, n, n, Sampling::full());
  const auto seq = measure(make_scene("peppers", n, n), plan);
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct_image(seq, plan));
}
BENCHMARK(BM_HadamardReconstruct)->Arg(32)->Arg(64);

void BM_Embed(benchmark::State& state) {
  const std::size_t n = side(state);
  const auto plan = build_plan(PatternMode::FourStepSinusoid, n, n, Sampling::full());
  const Image scene = make_scene("peppers", n, n);
  const Image wm = make_scene("logo", n, n);
  for (auto _ : state) benchmark::DoNotOptimize(embed(scene, wm, plan, 0.5));
}
BENCHMARK(BM_Embed)->Arg(32)->Arg(64);

void BM_StegoRoundTrip(benchmark::State& state) {
  const std::size_t n = side(state);
  const auto plan = build_plan(PatternMode::FourStepSinusoid, n, n, Sampling::full());
  const auto mask = build_mask(n, n, n * 6 / 10);
  const Image host = make_scene("peppers", n, n);
  const Image wm = make_scene("texture", n, n, 7);
  auto mapping = build_mapping(mask, default_watermark_freqs(n, n, capacity(mask)), n, n, 42);
  const TVSignal tv = stego_weights(wm, mapping, plan);
  mapping.normalization = tv.normalization;
  for (auto _ : state) {
    const auto seq = measure(host, plan, tv);
    benchmark::DoNotOptimize(extract_weights(seq, mapping, plan));
  }
}
BENCHMARK(BM_StegoRoundTrip)->Arg(64)->Arg(100);

void BM_Metrics(benchmark::State& state) {
  const std::size_t n = side(state);
  const Image x = make_scene("peppers", n, n);
  const Image y = make_scene("peppers", n, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(compare(x, y, "x", "y"));
}
BENCHMARK(BM_Metrics)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
