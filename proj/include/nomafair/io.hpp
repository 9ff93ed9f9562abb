#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nomafair {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Shortest decimal form with 12 significant digits (printf %.12g).
std::string format_num(double v);

/// FNV-1a 64-bit over raw bytes; used for the manifest checksums.
std::uint64_t fnv1a64(std::string_view bytes);

/// fnv1a64 rendered as 16 lowercase hex digits.
std::string fnv1a64_hex(std::string_view bytes);

/// Writes content to path, creating parent directories; throws IoError.
void write_text_file(const std::filesystem::path& path, std::string_view content);

/// Reads a whole file; throws IoError.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace nomafair
