#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sqeeg/execution.hpp"
#include "sqeeg/preprocess.hpp"
#include "sqeeg/types.hpp"

namespace sqeeg::spectral {

struct StftParams {
  double window_seconds = 2.0;
  double overlap_fraction = 0.99;
  double kaiser_beta = 8.0;
  double freq_min_hz = 0.5;
  double freq_max_hz = 30.0;
};

/// One-sided power spectral density (µV²/Hz) per STFT frame.
struct Spectrogram {
  Series freqs;
  Series times;                // frame centres, seconds
  std::vector<Series> power;   // power[f][t]

  Series time_average() const;
};

Series kaiser_window(std::size_t length, double beta);

/// Frames hop by round(L * (1 - overlap)) samples; rows outside
/// [freq_min_hz, freq_max_hz] are dropped.
Spectrogram stft_spectrogram(std::span<const double> signal, double sample_rate,
                             const StftParams& params = {});

/// Frame-averaged spectrum over the frames that fit inside `ranges` (the whole
/// signal when empty). Writes the retained frequency grid to `freqs`.
Series mean_power_spectrum(std::span<const double> signal, double sample_rate,
                           const StftParams& params, std::span<const SampleRange> ranges,
                           Series& freqs);

/// ROI x band mean power. Flattened order is ROI-major, band-minor.
struct BandPowerFeatures {
  static constexpr std::size_t kSize = kNumRegions * preprocess::kNumBands;

  std::string subject_id;
  std::array<std::array<double, preprocess::kNumBands>, kNumRegions> power{};

  std::array<double, kSize> flattened() const;
  static std::string feature_name(std::size_t index, const preprocess::BandSet& bands);
};

/// Per channel: time-averaged spectrum, then the mean over each band's bins,
/// then the mean over the ROI's channels.
BandPowerFeatures band_roi_power(const ingest::Recording& rec, const preprocess::RoiMap& rois,
                                 const preprocess::BandSet& bands, const StftParams& params = {},
                                 std::span<const SampleRange> ranges = {},
                                 Execution exec = Execution::Parallel);

struct AnalyticSignal {
  Series phase;      // radians in (-pi, pi]
  Series amplitude;  // >= 0
};

/// Frequency-domain analytic signal: positive bins doubled, negative bins
/// zeroed. Throws SignalTooShort below 16 samples.
std::vector<std::complex<double>> analytic(std::span<const double> signal);
AnalyticSignal analytic_signal(std::span<const double> signal);

}  // namespace sqeeg::spectral
