#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sqeeg/execution.hpp"
#include "sqeeg/ingest.hpp"
#include "sqeeg/types.hpp"

namespace sqeeg::preprocess {

using ingest::Recording;

enum class Window { Hamming };

/// Linear-phase FIR band-pass, applied as a centred symmetric kernel so the
/// net group delay is zero.
struct FilterSpec {
  double low_hz = 0.5;
  double high_hz = 30.0;
  int num_taps = 0;
  Window window = Window::Hamming;

  /// Taps from the Hamming main-lobe rule: ceil(3.3 * fs / transition) made
  /// odd, with the transition width min(low_hz, (high_hz - low_hz) / 2).
  /// For the default 0.5-30 Hz pass band this is ceil(3.3 * fs / 0.5).
  static FilterSpec for_band(double low_hz, double high_hz, double sample_rate);

  /// Throws DomainError unless 0 < low < high < fs/2 and num_taps is odd.
  void validate(double sample_rate) const;
};

int hamming_taps(double sample_rate, double transition_hz);

/// Windowed-sinc kernels, normalized to unit gain at the pass-band centre (DC
/// for the low-pass).
Series design_bandpass(const FilterSpec& spec, double sample_rate);
Series design_lowpass(double cutoff_hz, int num_taps, double sample_rate);

/// Centred convolution with an odd symmetric kernel after reflect-padding by
/// the kernel length. Requires x.size() > kernel.size().
Series filter_zero_phase(std::span<const double> x, std::span<const double> kernel);

/// Single-channel band-pass; throws SignalTooShort unless length > 3 * taps.
Series bandpass_zero_phase(std::span<const double> x, double sample_rate, const FilterSpec& spec);

Recording bandpass_zero_phase(const Recording& rec, const FilterSpec& spec,
                              Execution exec = Execution::Parallel);

/// Integer decimation behind a zero-phase low-pass at 0.4 * target_rate.
Recording downsample(const Recording& rec, double target_rate, Execution exec = Execution::Parallel);

/// Excess kurtosis m4 / m2^2 - 3; NaN for a constant series.
double excess_kurtosis(std::span<const double> x);

/// Labels of channels whose kurtosis robust z-score (median / 1.4826 MAD over
/// the channel population) exceeds `z_threshold`. Flat channels are always
/// reported.
std::vector<std::string> detect_bad_channels(const Recording& rec, double z_threshold = 5.0);

Recording drop_channels(const Recording& rec, std::span<const std::string> labels);

/// Subtracts the across-channel mean at every instant.
Recording average_reference(const Recording& rec);

/// Consecutive non-overlapping epochs; a trailing partial epoch is dropped.
std::vector<SampleRange> segment_epochs(const Recording& rec, double epoch_seconds = 30.0);

/// Channel label -> region assignment.
class RoiMap {
 public:
  RoiMap() = default;
  explicit RoiMap(std::vector<std::pair<std::string, Region>> entries);

  /// Assigns 10-20 labels by prefix (Fp/AF/F, FC/C, FT/T/TP, CP/P, PO/O);
  /// midline labels join their row's region, unrecognised labels such as EOG
  /// channels are left out.
  static RoiMap from_standard_labels(std::span<const std::string> labels);

  const std::vector<std::pair<std::string, Region>>& entries() const { return entries_; }

  /// Indices into rec of the channels mapped to `region` (unmapped or absent
  /// labels are skipped).
  std::vector<std::size_t> channels_in(const Recording& rec, Region region) const;

  /// Throws EmptyRoi if any region has no channel present in rec.
  void require_all_regions(const Recording& rec) const;

 private:
  std::vector<std::pair<std::string, Region>> entries_;
};

struct Band {
  std::string name;
  double low_hz = 0.0;
  double high_hz = 0.0;
  bool upper_inclusive = false;

  bool contains(double f) const {
    return f >= low_hz && (upper_inclusive ? f <= high_hz : f < high_hz);
  }
};

inline constexpr std::size_t kNumBands = 4;

struct BandSet {
  std::array<Band, kNumBands> bands;

  /// delta [0.5, 4), theta [4, 8), alpha [8, 11), beta [11, 30].
  static BandSet standard();
  std::size_t index_of(std::string_view name) const;
};

/// The whole pass band of the default conditioning filter, [0.5, 30] Hz.
Band broadband();

}  // namespace sqeeg::preprocess
