#include "embred/benchmarks.hpp"

#include <array>
#include <fstream>

#include "embred/errors.hpp"

namespace embred {

namespace {

const std::array<BenchmarkInfo, 12> kBenchmarks = {{
    {"MTurk-771", "EN-MTurk-771.txt", 771,
     "https://raw.githubusercontent.com/mfaruqui/eval-word-vectors/master/data/word-sim/EN-MTurk-771.txt"},
    {"WS-353-SIM", "EN-WS-353-SIM.txt", 203,
     "https://raw.githubusercontent.com/mfaruqui/eval-word-vectors/master/data/word-sim/EN-WS-353-SIM.txt"},
    {"MTurk-287", "EN-MTurk-287.txt", 287,
     "https://raw.githubusercontent.com/mfaruqui/eval-word-vectors/master/data/word-sim/EN-MTurk-287.txt"},
    {"VERB-143", "EN-VERB-143.txt", 144,
     "https://raw.githubusercontent.com/mfaruqui/eval-word-vectors/master/data/word-sim/EN-VERB-143.txt"},
    {"WS-353-ALL", "EN-WS-353-ALL.txt", 353,
     "https://raw.githubusercontent.com/mfaruqui/eval-word-vectors/master/data/word-sim/EN-WS-353-ALL.txt"},
    {"RW-Stanford", "EN-RW-STANFORD.txt", 2034,
     "https://raw.githubusercontent.com/mfaruqui/eval-word-vectors/master/data/word-sim/EN-RW-STANFORD.txt"},
    {"MEN-TR-3K", "EN-MEN-TR-3k.txt", 3000,
     "https://raw.githubusercontent.com/mfaruqui/eval-word-vectors/master/data/word-sim/EN-MEN-TR-3k.txt"},
    {"RG-65", "EN-RG-65.txt", 65,
     "https://raw.githubusercontent.com/mfaruqui/eval-word-vectors/master/data/word-sim/EN-RG-65.txt"},
    {"MC-30", "EN-MC-30.txt", 30,
     "https://raw.githubusercontent.com/mfaruqui/eval-word-vectors/master/data/word-sim/EN-MC-30.txt"},
    {"SIMLEX-999", "EN-SIMLEX-999.txt", 999,
     "https://raw.githubusercontent.com/mfaruqui/eval-word-vectors/master/data/word-sim/EN-SIMLEX-999.txt"},
    {"WS-353-REL", "EN-WS-353-REL.txt", 252,
     "https://raw.githubusercontent.com/mfaruqui/eval-word-vectors/master/data/word-sim/EN-WS-353-REL.txt"},
    {"YP-130", "EN-YP-130.txt", 130,
     "https://raw.githubusercontent.com/mfaruqui/eval-word-vectors/master/data/word-sim/EN-YP-130.txt"},
}};

}  // namespace

std::span<const BenchmarkInfo> canonical_benchmarks() { return kBenchmarks; }

std::vector<ManifestEntry> load_manifest(
    const std::filesystem::path& manifest_path,
    const std::optional<std::filesystem::path>& datasets_dir) {
    std::ifstream in(manifest_path);
    if (!in) throw IoError("cannot open manifest: " + manifest_path.string());

    const std::filesystem::path base =
        datasets_dir.value_or(manifest_path.parent_path());

    std::vector<ManifestEntry> entries;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;

        const std::size_t tab = line.find('\t');
        if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size())
            throw IoError(manifest_path.string() + ": line " + std::to_string(line_no) +
                          ": expected `name<TAB>path`");

        std::filesystem::path p(line.substr(tab + 1));
        if (p.is_relative()) p = base / p;
        entries.push_back({line.substr(0, tab), std::move(p)});
    }
    return entries;
}

}  // namespace embred
