#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace embred {

// One of the 12 standard word-similarity benchmarks, in the customary
// reporting order. pair_count is the expected number of human-rated pairs in
// the canonical file.
struct BenchmarkInfo {
    std::string_view name;
    std::string_view filename;
    std::size_t pair_count;
    std::string_view url;
};

std::span<const BenchmarkInfo> canonical_benchmarks();

struct ManifestEntry {
    std::string name;
    std::filesystem::path path;
};

// Manifest lines are `name<TAB>path`; `#` comments and blank lines are
// skipped. Relative paths resolve against datasets_dir when given, else the
// manifest's own directory.
std::vector<ManifestEntry> load_manifest(
    const std::filesystem::path& manifest_path,
    const std::optional<std::filesystem::path>& datasets_dir = std::nullopt);

}  // namespace embred
