// Serial reference kernels against their OpenMP counterparts. The argument of
// each parallel benchmark is the worker count.

#include <benchmark/benchmark.h>

#include "fractops/attractor.hpp"
#include "fractops/gallery.hpp"
#include "fractops/reference.hpp"
#include "fractops/tops.hpp"
#include "fractops/transform.hpp"

using namespace fractops;

namespace {

constexpr int kSize = 512;

const Ifs& fern() {
  static const Ifs ifs = fern_ifs();
  return ifs;
}

PixelGrid fern_grid() { return PixelGrid(kSize, kSize, fern().viewport()); }

const DomainPartition& fern_partition() {
  static const DomainPartition part = build_partition(fern(), fern_grid());
  return part;
}

const RasterPicture& square_picture() {
  static const RasterPicture pic = [] {
    const Ifs g = square_cts_ifs();
    RasterPicture p(PixelGrid(kSize, kSize, g.viewport()));
    for (std::size_t k = 0; k < p.pixels.size(); ++k) {
      p.coverage[k] = 1;
      p.pixels[k] = {static_cast<std::uint8_t>(k), static_cast<std::uint8_t>(k >> 8), 128};
    }
    return p;
  }();
  return pic;
}

// Four streams in both variants, so the two compute the same mask.
constexpr int kStreams = 4;

void BM_ChaosSerial(benchmark::State& state) {
  const ChaosOptions opts{4'000'000, 1, kDefaultBurnIn, kStreams};
  for (auto _ : state) benchmark::DoNotOptimize(reference::render_chaos_serial(fern(), opts, fern_grid()));
}

void BM_ChaosParallel(benchmark::State& state) {
  const ChaosOptions opts{4'000'000, 1, kDefaultBurnIn, kStreams};
  for (auto _ : state) benchmark::DoNotOptimize(render_chaos(fern(), opts, fern_grid()));
}

void BM_ConvergedSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reference::render_converged_serial(fern(), fern_grid()));
}

void BM_ConvergedParallel(benchmark::State& state) {
  ConvergedOptions opts;
  opts.workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(render_converged(fern(), fern_grid(), opts));
}

void BM_TransformSerial(benchmark::State& state) {
  const Ifs g = square_cts_ifs();
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::transform_picture_serial(fern_partition(), g, square_picture(), 24));
  }
}

void BM_TransformParallel(benchmark::State& state) {
  const Ifs g = square_cts_ifs();
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(transform_picture_deterministic(fern_partition(), g, square_picture(), 24, workers));
  }
}

}  // namespace

BENCHMARK(BM_ChaosSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ChaosParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConvergedSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConvergedParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TransformSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TransformParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
