#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "embred/embedding.hpp"

namespace embred {

struct SimilarityPair {
    std::string word1;
    std::string word2;
    double human_score;
};

// A word-similarity benchmark: human-rated word pairs.
struct SimilarityDataset {
    std::string name;
    std::vector<SimilarityPair> pairs;
};

// Lines are `word1<sep>word2<sep>score` with sep auto-detected (tab, comma, or
// whitespace) from the first data line. A leading header line is skipped when
// its third field is non-numeric.
SimilarityDataset load_dataset(const std::filesystem::path& path, std::string name);

// u.v / (|u||v|); 0 when either norm is below 1e-12.
double cosine(std::span<const float> u, std::span<const float> v);

// Pearson correlation of fractional (average-tie) ranks. Throws NumericError
// when fewer than 2 values or either side has no rank variance.
double spearman_rho(std::span<const double> a, std::span<const double> b);

struct EvalReport {
    std::string dataset;
    double rho_x100 = 0.0;  // NaN when the dataset could not be scored
    std::size_t pairs_total = 0;
    std::size_t pairs_evaluated = 0;
    std::size_t pairs_skipped_oov = 0;
    std::string error;  // non-empty when scoring failed

    bool ok() const { return error.empty(); }
};

// Scores every pair with both words in vocabulary by cosine similarity and
// correlates against the human ratings; OOV pairs are skipped and counted.
EvalReport evaluate(const EmbeddingMatrix& m, const SimilarityDataset& dataset,
                    bool fold_case = false);

struct BaselineScore {
    std::string dataset;
    double rho_x100;
};

struct SuiteAggregate {
    double cumulative_rho_x100 = 0.0;  // sum over scored datasets
    std::size_t datasets_scored = 0;
    std::size_t datasets_failed = 0;
    // Versus a baseline, over datasets scored in both runs: the mean of
    // per-dataset relative changes, and the relative change of the sums.
    std::optional<double> mean_relative_change_pct;
    std::optional<double> cumulative_relative_change_pct;
};

struct SuiteResult {
    std::vector<EvalReport> reports;
    SuiteAggregate aggregate;
};

// Evaluates every dataset; per-dataset failures are recorded in the report and
// do not abort the suite.
SuiteResult evaluate_suite(const EmbeddingMatrix& m, std::span<const SimilarityDataset> datasets,
                           bool fold_case = false, std::span<const BaselineScore> baseline = {});

// CSV: `dataset,pairs,evaluated,skipped,rho_x100` plus a SUM aggregate row.
void write_report_csv(std::ostream& out, const SuiteResult& result);

// Reads scores back from a report CSV (aggregate and failed rows skipped).
std::vector<BaselineScore> read_report_csv(const std::filesystem::path& path);

}  // namespace embred
