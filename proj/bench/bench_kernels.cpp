// Serial reference loops against the OpenMP kernels. Argument 0 runs serial,
// 1 runs parallel.
#include <benchmark/benchmark.h>

#include "sqeeg/classify.hpp"
#include "sqeeg/connectivity.hpp"
#include "sqeeg/coupling.hpp"
#include "sqeeg/preprocess.hpp"
#include "sqeeg/spectral.hpp"
#include "sqeeg/stats.hpp"
#include "sqeeg/synth.hpp"

using namespace sqeeg;

namespace {

Execution exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
}

const ingest::Recording& recording() {
  static const ingest::Recording rec = [] {
    synth::CohortRecordingSpec spec;
    spec.n_gs = 2;
    spec.n_ps = 2;
    spec.no_n3_gs = spec.no_n3_ps = 0;
    spec.rs_seconds = 60.0;
    spec.bad_channel_rate = 0.0;
    spec.seed = 1;
    return synth::gen_cohort_recordings(spec).back().rs.front();
  }();
  return rec;
}

void BM_Comodulogram(benchmark::State& state) {
  synth::PacSignalSpec spec;
  spec.duration = 60.0;
  const Series x = synth::gen_pac_signal(spec);
  coupling::ComodulogramConfig cfg;
  cfg.surrogates = 50;
  for (auto _ : state) benchmark::DoNotOptimize(coupling::comodulogram(x, spec.sample_rate, cfg, {}, exec_of(state)));
}

void BM_ChannelWpli(benchmark::State& state) {
  const auto& rec = recording();
  const auto band = preprocess::BandSet::standard().bands[0];
  const auto segs = connectivity::ensemble_segments(rec.num_samples(), rec.sample_rate, {});
  for (auto _ : state) benchmark::DoNotOptimize(connectivity::channel_wpli(rec, band, segs, {}, exec_of(state)));
}

void BM_BandRoiPower(benchmark::State& state) {
  const auto& rec = recording();
  const auto rois = preprocess::RoiMap::from_standard_labels(rec.channel_labels);
  const auto bands = preprocess::BandSet::standard();
  for (auto _ : state)
    benchmark::DoNotOptimize(spectral::band_roi_power(rec, rois, bands, {}, {}, exec_of(state)));
}

void BM_FeatureScreen(benchmark::State& state) {
  synth::CohortSpec spec;
  spec.n_features = 60;
  spec.effect = {1.0, 1.0};
  const auto data = synth::gen_cohort(spec);
  std::vector<Series> rows;
  std::vector<Group> groups;
  for (const auto& s : data.subjects) {
    rows.push_back(s.features);
    groups.push_back(s.label);
  }
  for (auto _ : state)
    benchmark::DoNotOptimize(stats::groupwise_feature_screen(rows, groups, 1000, 0.05, 7, exec_of(state)));
}

void BM_Loso(benchmark::State& state) {
  synth::CohortSpec spec;
  spec.n_features = 20;
  spec.effect = {1.0, 1.0, 1.0};
  const auto data = synth::gen_cohort(spec);
  const classify::ClassifierSpec svm{classify::ClassifierKind::SVM};
  for (auto _ : state) benchmark::DoNotOptimize(classify::loso_cv(data, svm, exec_of(state)));
}

}  // namespace

BENCHMARK(BM_Comodulogram)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ChannelWpli)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BandRoiPower)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FeatureScreen)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Loso)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
