#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace sqeeg {

using Series = std::vector<double>;

/// Half-open range of sample indices [begin, end) into a recording.
struct SampleRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end > begin ? end - begin : 0; }
  friend bool operator==(const SampleRange&, const SampleRange&) = default;
};

enum class Region { Frontal, Central, Temporal, Parietal, Occipital };
inline constexpr std::size_t kNumRegions = 5;
inline constexpr std::array<Region, kNumRegions> kAllRegions = {
    Region::Frontal, Region::Central, Region::Temporal, Region::Parietal,
    Region::Occipital};

enum class Group { GS, PS };
enum class SleepStage { Wake, REM, N1, N2, N3 };
enum class State { PreNap, Nap, PostNap, PostNight };

std::string_view to_string(Region region);
std::string_view to_string(Group group);
std::string_view to_string(SleepStage stage);
std::string_view to_string(State state);

// Parsers are case-insensitive and throw ParseError on unknown names.
Region parse_region(std::string_view text);
Group parse_group(std::string_view text);
SleepStage parse_stage(std::string_view text);
State parse_state(std::string_view text);

/// Session label used in tables ("nap", "pre-nap", ...).
std::string_view session_name(State state);

}  // namespace sqeeg
