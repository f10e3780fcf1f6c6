#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "sqeeg/classify.hpp"
#include "sqeeg/execution.hpp"
#include "sqeeg/ingest.hpp"
#include "sqeeg/rng.hpp"
#include "sqeeg/types.hpp"

namespace sqeeg::synth {

struct PacSignalSpec {
  double phase_freq = 1.5;
  double amp_freq = 20.0;
  double coupling = 1.0;      // chi in [0, 1]
  double noise_sd = 0.5;
  double duration = 120.0;    // seconds
  double sample_rate = 250.0;
  double amplitude = 0.5;     // fast-oscillation base amplitude A
  // Relative SD of a slow (< 0.2 Hz) wander of the slow oscillation's
  // instantaneous frequency. 0 gives a strictly periodic slow wave, whose
  // circular-shift surrogates keep the full coupling.
  double phase_jitter = 0.1;
  std::uint64_t seed = 0;
};

/// sin(theta) + [1 - chi + chi (1 + sin(theta)) / 2] A sin(2 pi fa t) + noise,
/// theta = 2 pi fp t plus the integrated frequency wander.
Series gen_pac_signal(const PacSignalSpec& spec);

/// White Gaussian noise restricted to [low_hz, high_hz] by spectral masking,
/// scaled to unit standard deviation.
Series band_limited_noise(std::size_t n, double sample_rate, double low_hz, double high_hz, Rng& rng);

using Mix = std::array<std::array<double, 2>, 2>;

struct CommonSourceSpec {
  std::size_t lag_samples = 0;
  Mix mix{{{1.0, 0.0}, {0.0, 1.0}}};
  double noise_sd = 0.3;
  double duration = 60.0;
  double sample_rate = 250.0;
  double source_low_hz = 8.0;   // the source is band-limited noise
  double source_high_hz = 12.0;
  std::uint64_t seed = 0;
};

/// Two channels = mix * [s(t), s(t - lag)] + independent noise, where s has
/// unit standard deviation.
ingest::Recording gen_common_source_pair(const CommonSourceSpec& spec);

struct CohortSpec {
  std::size_t n_gs = 11;
  std::size_t n_ps = 13;
  std::size_t n_features = 20;
  Series effect;  // per-feature mean shift of PS in SD units; missing entries are 0
  std::string session = "synthetic";
  std::uint64_t seed = 0;
};

/// Class-conditional unit Gaussians; subjects GS first, ids "S01", "S02", ...
classify::Dataset gen_cohort(const CohortSpec& spec);

/// The 12-channel montage of the synthetic recordings.
const std::vector<std::string>& standard_montage();

struct CohortRecordingSpec {
  std::size_t n_gs = 11;
  std::size_t n_ps = 13;
  std::size_t no_n3_gs = 4;   // subjects per group whose nap has no N3
  std::size_t no_n3_ps = 4;
  double sample_rate = 250.0;
  double rs_seconds = 60.0;
  double nap_seconds = 150.0;
  double effect = 1.0;        // 0 makes the groups identical in distribution
  double bad_channel_rate = 0.3;
  std::uint64_t seed = 0;
};

struct SyntheticSubject {
  ingest::SubjectMeta meta;
  std::vector<ingest::Recording> rs;  // RS 1-8
  ingest::Recording nap;
  ingest::Hypnogram hypnogram;
  bool has_n3 = true;
};

/// Per-subject recordings with planted group differences in frontal beta
/// power, temporal/parietal delta lag and delta-phase/beta-amplitude coupling.
/// Subject i draws from derive_seed(seed, i).
std::vector<SyntheticSubject> gen_cohort_recordings(const CohortRecordingSpec& spec,
                                                    Execution exec = Execution::Parallel);

}  // namespace sqeeg::synth
