#include "embred/simeval.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "embred/errors.hpp"

namespace embred {

namespace {

std::vector<std::string_view> split_on(std::string_view line, char sep) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (start <= line.size()) {
        std::size_t end = line.find(sep, start);
        if (end == std::string_view::npos) end = line.size();
        fields.push_back(line.substr(start, end - start));
        start = end + 1;
        if (end == line.size()) break;
    }
    return fields;
}

std::vector<std::string_view> split_whitespace(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) fields.push_back(line.substr(start, i - start));
    }
    return fields;
}

bool parse_double(std::string_view s, double& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

enum class Sep { kTab, kComma, kWhitespace };

std::vector<std::string_view> split_fields(std::string_view line, Sep sep) {
    switch (sep) {
        case Sep::kTab: return split_on(line, '\t');
        case Sep::kComma: return split_on(line, ',');
        case Sep::kWhitespace: return split_whitespace(line);
    }
    return {};
}

// Fractional average ranks via sort-and-group.
std::vector<double> average_ranks(std::span<const double> values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return values[i] < values[j]; });

    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        const double rank = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
        i = j + 1;
    }
    return ranks;
}

}  // namespace

SimilarityDataset load_dataset(const std::filesystem::path& path, std::string name) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open dataset file: " + path.string());

    SimilarityDataset ds;
    ds.name = std::move(name);

    std::string line;
    std::size_t line_no = 0;
    bool first_data_line = true;
    Sep sep = Sep::kWhitespace;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        if (first_data_line) {
            if (line.find('\t') != std::string::npos) sep = Sep::kTab;
            else if (line.find(',') != std::string::npos) sep = Sep::kComma;
            else sep = Sep::kWhitespace;
        }

        const std::vector<std::string_view> fields = split_fields(line, sep);
        if (fields.size() < 3)
            throw IoError(path.string() + ": line " + std::to_string(line_no) +
                          ": expected `word1 word2 score`");

        double score{};
        if (!parse_double(fields[2], score)) {
            // A non-numeric third field is only acceptable as a header line.
            if (first_data_line) {
                first_data_line = false;
                continue;
            }
            throw IoError(path.string() + ": line " + std::to_string(line_no) +
                          ": cannot parse score '" + std::string(fields[2]) + "'");
        }
        if (!std::isfinite(score))
            throw IoError(path.string() + ": line " + std::to_string(line_no) +
                          ": non-finite score");
        first_data_line = false;
        ds.pairs.push_back({std::string(fields[0]), std::string(fields[1]), score});
    }

    if (ds.pairs.empty()) throw IoError("no word pairs in dataset file: " + path.string());
    return ds;
}

double cosine(std::span<const float> u, std::span<const float> v) {
    if (u.size() != v.size())
        throw ArgError("cosine: dimension mismatch (" + std::to_string(u.size()) + " vs " +
                       std::to_string(v.size()) + ")");
    double dot = 0.0, uu = 0.0, vv = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double a = u[i], b = v[i];
        dot += a * b;
        uu += a * a;
        vv += b * b;
    }
    const double nu = std::sqrt(uu), nv = std::sqrt(vv);
    if (nu < 1e-12 || nv < 1e-12) return 0.0;
    return std::clamp(dot / (nu * nv), -1.0, 1.0);
}

double spearman_rho(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw ArgError("spearman_rho: length mismatch (" + std::to_string(a.size()) + " vs " +
                       std::to_string(b.size()) + ")");
    if (a.size() < 2)
        throw NumericError("spearman_rho: undefined for fewer than 2 values");

    const std::vector<double> ra = average_ranks(a);
    const std::vector<double> rb = average_ranks(b);
    const double n = static_cast<double>(ra.size());
    const double ma = std::accumulate(ra.begin(), ra.end(), 0.0) / n;
    const double mb = std::accumulate(rb.begin(), rb.end(), 0.0) / n;

    double sab = 0.0, saa = 0.0, sbb = 0.0;
    for (std::size_t i = 0; i < ra.size(); ++i) {
        sab += (ra[i] - ma) * (rb[i] - mb);
        saa += (ra[i] - ma) * (ra[i] - ma);
        sbb += (rb[i] - mb) * (rb[i] - mb);
    }
    if (saa <= 0.0 || sbb <= 0.0)
        throw NumericError("spearman_rho: undefined correlation (zero rank variance)");
    return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

EvalReport evaluate(const EmbeddingMatrix& m, const SimilarityDataset& dataset, bool fold_case) {
    EvalReport report;
    report.dataset = dataset.name;
    report.pairs_total = dataset.pairs.size();

    std::vector<double> cosines, human;
    cosines.reserve(dataset.pairs.size());
    human.reserve(dataset.pairs.size());
    for (const SimilarityPair& pair : dataset.pairs) {
        const auto u = m.lookup(pair.word1, fold_case);
        const auto v = m.lookup(pair.word2, fold_case);
        if (!u || !v) {
            ++report.pairs_skipped_oov;
            continue;
        }
        cosines.push_back(cosine(*u, *v));
        human.push_back(pair.human_score);
    }
    report.pairs_evaluated = cosines.size();

    if (report.pairs_evaluated < 2)
        throw NumericError("evaluate: dataset '" + dataset.name + "' has " +
                           std::to_string(report.pairs_evaluated) +
                           " in-vocabulary pairs; need at least 2");
    try {
        report.rho_x100 = 100.0 * spearman_rho(cosines, human);
    } catch (const NumericError& e) {
        throw NumericError("evaluate: dataset '" + dataset.name + "': " + e.what());
    }
    return report;
}

SuiteResult evaluate_suite(const EmbeddingMatrix& m, std::span<const SimilarityDataset> datasets,
                           bool fold_case, std::span<const BaselineScore> baseline) {
    SuiteResult result;
    result.reports.reserve(datasets.size());

    for (const SimilarityDataset& ds : datasets) {
        try {
            result.reports.push_back(evaluate(m, ds, fold_case));
        } catch (const std::exception& e) {
            EvalReport failed;
            failed.dataset = ds.name;
            failed.rho_x100 = std::nan("");
            failed.pairs_total = ds.pairs.size();
            failed.error = e.what();
            result.reports.push_back(std::move(failed));
        }
    }

    for (const EvalReport& r : result.reports) {
        if (!r.ok()) {
            ++result.aggregate.datasets_failed;
            continue;
        }
        ++result.aggregate.datasets_scored;
        result.aggregate.cumulative_rho_x100 += r.rho_x100;
    }

    if (!baseline.empty()) {
        double sum_changes = 0.0, base_sum = 0.0, new_sum = 0.0;
        std::size_t matched = 0;
        for (const EvalReport& r : result.reports) {
            if (!r.ok()) continue;
            const auto it = std::find_if(baseline.begin(), baseline.end(),
                                         [&](const BaselineScore& b) { return b.dataset == r.dataset; });
            if (it == baseline.end() || it->rho_x100 == 0.0) continue;
            sum_changes += 100.0 * (r.rho_x100 - it->rho_x100) / std::abs(it->rho_x100);
            base_sum += it->rho_x100;
            new_sum += r.rho_x100;
            ++matched;
        }
        if (matched > 0) {
            result.aggregate.mean_relative_change_pct = sum_changes / static_cast<double>(matched);
            if (base_sum != 0.0)
                result.aggregate.cumulative_relative_change_pct =
                    100.0 * (new_sum - base_sum) / std::abs(base_sum);
        }
    }
    return result;
}

namespace {

std::string format_fixed(double v, int precision) {
    if (std::isnan(v)) return "nan";
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, precision);
    if (ec != std::errc()) throw IoError("report formatting failed");
    return std::string(buf, ptr);
}

}  // namespace

void write_report_csv(std::ostream& out, const SuiteResult& result) {
    out << "dataset,pairs,evaluated,skipped,rho_x100\n";
    std::size_t pairs = 0, evaluated = 0, skipped = 0;
    for (const EvalReport& r : result.reports) {
        out << r.dataset << ',' << r.pairs_total << ',' << r.pairs_evaluated << ','
            << r.pairs_skipped_oov << ',' << format_fixed(r.rho_x100, 2) << '\n';
        pairs += r.pairs_total;
        evaluated += r.pairs_evaluated;
        skipped += r.pairs_skipped_oov;
    }
    out << "SUM," << pairs << ',' << evaluated << ',' << skipped << ','
        << format_fixed(result.aggregate.cumulative_rho_x100, 2) << '\n';
}

std::vector<BaselineScore> read_report_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open report CSV: " + path.string());

    std::vector<BaselineScore> scores;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line_no == 1) continue;  // header
        const std::vector<std::string_view> fields = split_on(line, ',');
        if (fields.size() != 5)
            throw IoError(path.string() + ": line " + std::to_string(line_no) +
                          ": expected 5 CSV fields");
        if (fields[0] == "SUM") continue;
        double rho{};
        // Failed dataset rows carry "nan"; leave them out.
        if (!parse_double(fields[4], rho) || !std::isfinite(rho)) continue;
        scores.push_back({std::string(fields[0]), rho});
    }
    return scores;
}

}  // namespace embred
