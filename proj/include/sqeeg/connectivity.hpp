#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sqeeg/execution.hpp"
#include "sqeeg/ingest.hpp"
#include "sqeeg/preprocess.hpp"
#include "sqeeg/types.hpp"

namespace sqeeg::connectivity {

/// The ensemble is built from tapered sliding windows inside the analysed
/// ranges (stage epochs or the whole recording).
struct WpliParams {
  double window_seconds = 2.0;
  double overlap_fraction = 0.5;
  double kaiser_beta = 8.0;
  std::size_t min_segments = 8;
};

/// Windows of `window` samples every `hop` samples that fit inside each range.
std::vector<SampleRange> sliding_segments(std::span<const SampleRange> ranges, std::size_t window,
                                          std::size_t hop);
std::vector<SampleRange> ensemble_segments(std::size_t num_samples, double sample_rate,
                                           const WpliParams& params,
                                           std::span<const SampleRange> ranges = {});

/// Tapered spectra of one channel restricted to the band bins, stored
/// segment-major. All segments must share one length.
struct SegmentSpectra {
  std::size_t bins_per_segment = 0;
  std::vector<std::complex<double>> values;
};

SegmentSpectra band_spectra(std::span<const double> x, double sample_rate,
                            const preprocess::Band& band, std::span<const SampleRange> segments,
                            double kaiser_beta);

/// |sum Im Sxy| / sum |Im Sxy| over every (segment, band-bin) cross-spectrum
/// entry; 0 when the denominator vanishes.
double wpli_from_spectra(const SegmentSpectra& x, const SegmentSpectra& y);

/// Weighted phase lag index of two band-limited series. Throws
/// InsufficientData with fewer than `min_segments` segments.
double wpli_pair(std::span<const double> x, std::span<const double> y, double sample_rate,
                 const preprocess::Band& band, std::span<const SampleRange> segments,
                 double kaiser_beta = 8.0, std::size_t min_segments = 8);

inline constexpr std::size_t kNumConnections = 15;

/// ROI x ROI wPLI. The 15 unique connections are the upper triangle including
/// the diagonal, row-major (Frontal-Frontal, Frontal-Central, ...).
struct ConnectivityMatrix {
  std::string band;
  std::array<std::array<double, kNumRegions>, kNumRegions> roi{};

  std::array<double, kNumConnections> unique_connections() const;
  static std::string connection_name(std::size_t index);
};

/// Channel x channel wPLI of band-filtered data (symmetric, zero diagonal).
std::vector<std::vector<double>> channel_wpli(const ingest::Recording& filtered,
                                              const preprocess::Band& band,
                                              std::span<const SampleRange> segments,
                                              const WpliParams& params,
                                              Execution exec = Execution::Parallel);

/// Band-filters every channel, computes channel wPLI over the ensemble and
/// averages channel pairs inside each ROI pair; the within-ROI value averages
/// distinct channel pairs only (0 when the ROI holds a single channel).
ConnectivityMatrix wpli_matrix(const ingest::Recording& rec, const preprocess::RoiMap& rois,
                               const preprocess::Band& band, const WpliParams& params = {},
                               std::span<const SampleRange> ranges = {},
                               Execution exec = Execution::Parallel);

/// 15 connections x 4 bands, connection-major.
struct WpliFeatures {
  static constexpr std::size_t kSize = kNumConnections * preprocess::kNumBands;

  std::string subject_id;
  std::array<double, kSize> values{};

  static std::string feature_name(std::size_t index, const preprocess::BandSet& bands);
};

WpliFeatures wpli_features(const ingest::Recording& rec, const preprocess::RoiMap& rois,
                           const preprocess::BandSet& bands, const WpliParams& params = {},
                           std::span<const SampleRange> ranges = {},
                           Execution exec = Execution::Parallel);

}  // namespace sqeeg::connectivity
