#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace uad {

// Raised for malformed or missing input data. The CLI maps it to exit code 2.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Raised for invalid configuration values. The CLI maps it to exit code 1.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

bool is_ascii_upper(char c);
bool is_ascii_lower(char c);
bool is_ascii_letter(char c);
bool is_ascii_digit(char c);
bool is_ascii_alnum(char c);
char ascii_lower(char c);
std::string ascii_lower(std::string_view s);

std::vector<std::string> split_ws(std::string_view s);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

// 64-bit FNV-1a over the little-endian seed bytes followed by the key bytes.
// Stable across platforms; used for fold assignment.
std::uint64_t hash64(std::uint64_t seed, std::string_view key);

// SplitMix64 step, used to derive per-worker / per-epoch RNG seeds.
std::uint64_t splitmix64(std::uint64_t& state);

// Writes via a temp file in the same directory, then renames over the target.
void write_file_atomic(const std::filesystem::path& path,
                       const std::function<void(std::ostream&)>& writer);

std::string read_file(const std::filesystem::path& path);

// Formats a double with enough digits to round-trip, without trailing noise.
// All persisted floats go through this so reruns are byte-identical.
std::string format_double(double v);

}  // namespace uad
