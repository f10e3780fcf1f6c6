#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sqeeg/execution.hpp"
#include "sqeeg/ingest.hpp"
#include "sqeeg/preprocess.hpp"
#include "sqeeg/types.hpp"

namespace sqeeg::coupling {

/// Equal-width phase bins over (-pi, pi]; bin j covers
/// [-180 + j * width, -180 + (j + 1) * width) degrees.
struct PhaseBinning {
  std::size_t n_bins = 18;

  double width_degrees() const { return 360.0 / static_cast<double>(n_bins); }
  std::size_t bin_of(double phase) const;
};

/// Normalized mean amplitude per phase bin.
struct AmplitudeDistribution {
  Series p;
};

/// Throws InsufficientCoverage when a bin receives no sample.
AmplitudeDistribution amplitude_distribution(std::span<const double> phase, std::span<const double> amplitude,
                                             const PhaseBinning& binning = {});

/// KL divergence from the uniform distribution divided by log N, with
/// 0 log 0 = 0. Lies in [0, 1].
double modulation_index(const AmplitudeDistribution& dist);

struct SurrogateResult {
  double observed = 0.0;
  Series surrogates;
  double p_value = 1.0;  // (1 + #{surrogate >= observed}) / (r + 1)
};

/// Null distribution from circular shifts of the amplitude series by offsets
/// drawn uniformly from [min_shift, L - min_shift]. Throws SignalTooShort when
/// L < 10 * min_shift.
SurrogateResult surrogate_mi(std::span<const double> phase, std::span<const double> amplitude,
                             const PhaseBinning& binning, std::size_t min_shift, std::size_t r,
                             std::uint64_t seed);

/// Centres with a filter half-width; the lower band edge is floored.
struct FrequencyGrid {
  Series centers;
  double half_width_hz = 1.0;
  double floor_hz = 0.25;

  static FrequencyGrid linear(double first, double last, std::size_t count, double half_width_hz,
                              double floor_hz);
  std::pair<double, double> band(std::size_t i) const;
};

struct ComodulogramConfig {
  FrequencyGrid phase = FrequencyGrid::linear(0.5, 10.0, 10, 1.0, 0.25);
  FrequencyGrid amplitude = FrequencyGrid::linear(11.0, 30.0, 10, 2.5, 0.25);
  PhaseBinning binning{};
  std::size_t surrogates = 200;
  std::uint64_t seed = 0;
  double edge_trim = 0.1;  // fraction dropped at each end after filtering
};

struct Comodulogram {
  Series phase_freqs;
  Series amp_freqs;
  std::vector<Series> mi;           // mi[phase][amp]
  std::vector<Series> surrogate_p;  // same layout; 1 when surrogates are disabled
};

/// Filtered phase and amplitude series for every grid band, computed once per
/// source and shared by all comodulogram cells.
struct BandDecomposition {
  std::vector<Series> phase;      // per phase band
  std::vector<Series> amplitude;  // per amplitude band
  std::vector<std::size_t> samples;  // pooled sample indices after trimming
  std::vector<std::size_t> min_shift;  // per phase band: one cycle in samples
};

BandDecomposition decompose(std::span<const double> phase_source, std::span<const double> amp_source,
                            double sample_rate, const ComodulogramConfig& config,
                            std::span<const SampleRange> ranges = {}, Execution exec = Execution::Parallel);

/// MI of one grid cell on the pooled samples.
double cell_mi(const BandDecomposition& d, std::size_t phase_band, std::size_t amp_band,
               const PhaseBinning& binning);

/// Per-cell MI and surrogate p. Cell (i, j) seeds its surrogates with
/// derive_seed(config.seed, i * n_amp + j), so serial and parallel runs match.
Comodulogram comodulogram(std::span<const double> phase_source, std::span<const double> amp_source,
                          double sample_rate, const ComodulogramConfig& config,
                          std::span<const SampleRange> ranges = {}, Execution exec = Execution::Parallel);

/// Comodulogram of several decompositions (e.g. one per recording of a
/// session) whose pooled samples are concatenated before binning.
Comodulogram comodulogram(std::span<const BandDecomposition> parts, const ComodulogramConfig& config,
                          Execution exec = Execution::Parallel);

inline Comodulogram comodulogram(std::span<const double> signal, double sample_rate,
                                 const ComodulogramConfig& config, std::span<const SampleRange> ranges = {},
                                 Execution exec = Execution::Parallel) {
  return comodulogram(signal, signal, sample_rate, config, ranges, exec);
}

/// Mean of the member channels of one region.
Series roi_signal(const ingest::Recording& rec, const preprocess::RoiMap& rois, Region region);

inline constexpr std::size_t kNumRoiPairs = kNumRegions * kNumRegions;

/// (phase ROI, amplitude ROI) pairs, phase-major: index = phase * 5 + amp.
std::string roi_pair_name(std::size_t index);

/// Mean MI over the delta-phase x beta-amplitude cells of the comodulogram of
/// every (phase ROI, amplitude ROI) pair. No surrogates are drawn.
std::array<double, kNumRoiPairs> delta_beta_pair_mi(const ingest::Recording& rec,
                                                    const preprocess::RoiMap& rois,
                                                    const ComodulogramConfig& config,
                                                    const preprocess::BandSet& bands,
                                                    std::span<const SampleRange> ranges = {},
                                                    Execution exec = Execution::Parallel);

/// Projection of per-subject pair MI onto the selected pairs; one row per
/// subject. Throws EmptySelection when the mask selects nothing.
std::vector<Series> delta_beta_pac_features(std::span<const std::array<double, kNumRoiPairs>> subjects,
                                            std::span<const bool> mask);

}  // namespace sqeeg::coupling
