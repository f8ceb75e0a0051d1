#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace delineate {

// Error taxonomy. Every failure surfaced to callers derives from Error so the
// CLI can report a category plus message and exit non-zero.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};
struct IoError : Error {
    using Error::Error;
};
struct FormatError : Error {  // corpus-format / schema violations
    using Error::Error;
};
struct ParameterError : Error {
    using Error::Error;
};
struct CurationError : Error {
    using Error::Error;
};
struct CompileError : Error {
    using Error::Error;
};
struct DependencyError : Error {
    using Error::Error;
};
struct ConsistencyError : Error {
    using Error::Error;
};

// FNV-1a 64-bit. Non-cryptographic; used for stage up-to-date checks.
inline std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t h = 0xcbf29ce484222325ull) {
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string hex64(std::uint64_t v);
std::uint64_t file_digest(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);
// Writes to a sibling temp file and renames into place.
void atomic_write_file(const std::filesystem::path& path, std::string_view content);

// Deterministic RNG with portable draw routines. std::uniform_*_distribution
// is implementation-defined, so bounded draws are done by rejection here.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, n). n must be > 0.
    std::uint64_t bounded(std::uint64_t n);

    // Uniform in [0, 1).
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  private:
    std::mt19937_64 engine_;
};

// Half-away-from-zero rounding, the convention used for every printed cell.
long long round_half_away(double x);
double round_decimals(double x, int decimals);

std::string format_double(double x);          // shortest stable form, %.12g
std::string format_fixed(double x, int dec);  // fixed decimals

std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

}  // namespace delineate
