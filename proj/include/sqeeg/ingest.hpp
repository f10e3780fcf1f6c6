#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sqeeg/types.hpp"

namespace sqeeg::ingest {

/// Multichannel recording; samples are stored one row per channel, in µV.
struct Recording {
  std::string subject_id;
  double sample_rate = 0.0;
  std::vector<std::string> channel_labels;
  std::vector<Series> samples;
  State state = State::PreNap;
  int rs_index = 0;  // resting-state block 1-8; 0 when not applicable

  std::size_t num_channels() const { return samples.size(); }
  std::size_t num_samples() const { return samples.empty() ? 0 : samples.front().size(); }
  double duration_seconds() const { return static_cast<double>(num_samples()) / sample_rate; }

  /// Index of `label`; throws DomainError when absent.
  std::size_t channel_index(std::string_view label) const;

  /// Checks row lengths, rate, label uniqueness and finiteness; throws DomainError.
  void validate() const;
};

/// Metadata that travels next to a CSV recording.
struct Sidecar {
  double sample_rate_hz = 0.0;
  std::string subject_id;
  State state = State::PreNap;
  int rs_index = 0;
};

/// Reads `key = value` lines (sample_rate_hz, subject_id, state_tag, rs_index).
/// A missing or non-positive sample_rate_hz raises ConfigError.
Sidecar load_sidecar(const std::filesystem::path& path);
void write_sidecar(const std::filesystem::path& path, const Sidecar& sidecar);
Sidecar sidecar_of(const Recording& rec);

Recording load_csv_recording(const std::filesystem::path& path, const Sidecar& meta);
std::string render_csv_recording(const Recording& rec);
void write_csv_recording(const std::filesystem::path& path, const Recording& rec);

/// Loads a continuous, single-rate, annotation-free EDF file, mapping digital
/// values to physical units with each signal's linear calibration.
Recording load_edf_recording(const std::filesystem::path& path);

/// 100 * retained / total.
double compute_retention(std::size_t total_channels, std::size_t retained_channels);

struct MeanSem {
  double mean = 0.0;
  double sem = 0.0;
};

/// Mean and standard error (sample SD / sqrt(n)); sem is 0 for a single value.
MeanSem summarize(std::span<const double> values);

/// "92.85 ± 4.66" style rendering.
std::string format_mean_sem(const MeanSem& value, int decimals = 2);

struct SubjectMeta {
  std::string subject_id;
  int psqi_score = 0;
  double age = 0.0;
  char sex = 'F';
  Group group = Group::GS;
};

/// GS when the global PSQI score is at most 5, PS otherwise.
Group assign_group(int psqi_score);

/// Table with header subject_id,psqi,age,sex. Groups are derived from PSQI.
std::vector<SubjectMeta> load_meta_table(const std::filesystem::path& path);
std::string render_meta_table(std::span<const SubjectMeta> subjects);

struct Hypnogram {
  static constexpr double kEpochSeconds = 30.0;
  std::vector<SleepStage> stages;
};

/// One stage label per line; blank lines and '#' comments are skipped.
Hypnogram load_hypnogram(const std::filesystem::path& path);
std::string render_hypnogram(const Hypnogram& hyp);

/// Sample ranges of the epochs labelled `stage`. Throws AlignmentError when the
/// hypnogram covers more time than the recording.
std::vector<SampleRange> select_stage_epochs(const Recording& rec, const Hypnogram& hyp,
                                             SleepStage stage);

}  // namespace sqeeg::ingest
