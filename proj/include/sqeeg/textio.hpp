#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sqeeg::textio {

/// Shortest decimal text that parses back to exactly `value`.
std::string format_double(double value);

/// Fixed-point rendering used by human-facing tables.
std::string format_fixed(double value, int decimals);

/// Parses the whole token as a double; nullopt on any trailing garbage.
std::optional<double> parse_double(std::string_view token);

std::string_view trim(std::string_view text);
std::vector<std::string> split(std::string_view line, char sep);

/// Writes through a temporary sibling and renames it into place, so readers
/// never see a partially written file.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

std::string read_file(const std::filesystem::path& path);

}  // namespace sqeeg::textio
