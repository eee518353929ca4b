// embred: reduce the dimensionality of pre-trained word embeddings and score
// the result on standard word-similarity benchmarks.
#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "embred/benchmarks.hpp"
#include "embred/embedding.hpp"
#include "embred/errors.hpp"
#include "embred/pca.hpp"
#include "embred/pipeline.hpp"
#include "embred/postprocess.hpp"
#include "embred/simeval.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitArg = 2;
constexpr int kExitIo = 3;
constexpr int kExitNumeric = 4;

struct ReduceOptions {
    std::string input;
    std::string output;
    std::string method = "algo";
    long long new_dim = 0;  // 0: half the input dimension
    long long threshold = 7;
    long long expected_dim = 0;  // 0: take from file
    int precision = 6;
};

struct EvalOptions {
    std::string input;
    std::string manifest;
    std::string datasets_dir;
    std::string output;  // empty: stdout
    std::string baseline;
    bool fold_case = false;
    long long expected_dim = 0;
};

struct VarianceOptions {
    std::string input;
    std::string output;  // empty: stdout
    long long top_k = 20;
    std::string method;  // empty: report the input as-is
    long long new_dim = 0;
    long long threshold = 7;
};

struct FetchOptions {
    std::string verify_dir;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

embred::EmbeddingMatrix load_with_log(const std::string& path, long long expected_dim) {
    const auto start = std::chrono::steady_clock::now();
    embred::LoadStats stats;
    std::optional<Eigen::Index> expect;
    if (expected_dim > 0) expect = static_cast<Eigen::Index>(expected_dim);
    embred::EmbeddingMatrix m = embred::load_embeddings(path, expect, &stats);
    std::cerr << "loaded " << path << ": " << m.rows() << " x " << m.dim() << " ("
              << seconds_since(start) << " s)\n";
    if (stats.duplicates_dropped > 0)
        std::cerr << "warning: dropped " << stats.duplicates_dropped
                  << " duplicate token(s), kept first occurrence\n";
    return m;
}

embred::ReductionSpec make_spec(const std::string& method, long long new_dim,
                                long long threshold, Eigen::Index input_dim) {
    embred::ReductionSpec spec;
    spec.method = embred::parse_method(method);
    spec.target_dim =
        new_dim > 0 ? static_cast<Eigen::Index>(new_dim) : input_dim / 2;
    spec.threshold = static_cast<Eigen::Index>(threshold);
    return spec;
}

int cmd_reduce(const ReduceOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    const embred::EmbeddingMatrix m = load_with_log(opt.input, opt.expected_dim);

    const embred::ReductionSpec spec = make_spec(opt.method, opt.new_dim, opt.threshold, m.dim());
    spec.validate(m.dim());
    std::cout << "stages: " << embred::describe(spec) << '\n';

    const embred::EmbeddingMatrix reduced = embred::reduce(m, spec);
    embred::save_embeddings(reduced, opt.output, opt.precision);

    std::cout << "input:  " << m.rows() << " x " << m.dim() << '\n'
              << "output: " << reduced.rows() << " x " << reduced.dim() << " -> " << opt.output
              << '\n'
              << "wall time: " << seconds_since(start) << " s\n";
    return kExitOk;
}

std::vector<embred::SimilarityDataset> load_manifest_datasets(const EvalOptions& opt) {
    std::optional<std::filesystem::path> dir;
    if (!opt.datasets_dir.empty()) dir = opt.datasets_dir;
    const std::vector<embred::ManifestEntry> entries = embred::load_manifest(opt.manifest, dir);
    if (entries.empty()) throw embred::ArgError("no datasets in manifest: " + opt.manifest);

    std::vector<embred::SimilarityDataset> datasets;
    datasets.reserve(entries.size());
    for (const embred::ManifestEntry& e : entries)
        datasets.push_back(embred::load_dataset(e.path, e.name));
    return datasets;
}

int cmd_eval(const EvalOptions& opt) {
    const std::vector<embred::SimilarityDataset> datasets = load_manifest_datasets(opt);
    const embred::EmbeddingMatrix m = load_with_log(opt.input, opt.expected_dim);

    std::vector<embred::BaselineScore> baseline;
    if (!opt.baseline.empty()) baseline = embred::read_report_csv(opt.baseline);

    const embred::SuiteResult result = embred::evaluate_suite(m, datasets, opt.fold_case, baseline);

    if (opt.output.empty()) {
        embred::write_report_csv(std::cout, result);
    } else {
        std::ofstream out(opt.output);
        if (!out) throw embred::IoError("cannot open output file: " + opt.output);
        embred::write_report_csv(out, result);
        if (!out.flush()) throw embred::IoError("write failed: " + opt.output);
        std::cout << "wrote " << opt.output << '\n';
    }

    const embred::SuiteAggregate& agg = result.aggregate;
    std::cerr << "scored " << agg.datasets_scored << " dataset(s), cumulative rho_x100 = "
              << agg.cumulative_rho_x100 << '\n';
    if (agg.mean_relative_change_pct)
        std::cerr << "vs baseline: mean per-dataset change " << *agg.mean_relative_change_pct
                  << "%, cumulative change "
                  << (agg.cumulative_relative_change_pct ? *agg.cumulative_relative_change_pct : 0.0)
                  << "%\n";
    for (const embred::EvalReport& r : result.reports)
        if (!r.ok()) std::cerr << "warning: " << r.dataset << " not scored: " << r.error << '\n';

    if (agg.datasets_scored == 0)
        throw embred::NumericError("no dataset could be scored");
    return kExitOk;
}

int cmd_report_variance(const VarianceOptions& opt) {
    embred::EmbeddingMatrix m = load_with_log(opt.input, 0);
    if (!opt.method.empty()) {
        const embred::ReductionSpec spec = make_spec(opt.method, opt.new_dim, opt.threshold, m.dim());
        std::cerr << "applying: " << embred::describe(spec) << '\n';
        m = embred::reduce(m, spec);
    }

    const auto entries =
        embred::variance_report(m, std::min<Eigen::Index>(static_cast<Eigen::Index>(opt.top_k),
                                                          std::min(m.rows(), m.dim())));
    if (opt.output.empty()) {
        embred::write_variance_csv(std::cout, entries);
    } else {
        std::ofstream out(opt.output);
        if (!out) throw embred::IoError("cannot open output file: " + opt.output);
        embred::write_variance_csv(out, entries);
        if (!out.flush()) throw embred::IoError("write failed: " + opt.output);
        std::cout << "wrote " << opt.output << '\n';
    }
    return kExitOk;
}

int cmd_fetch_datasets(const FetchOptions& opt) {
    std::cout << "canonical word-similarity benchmarks (" << embred::canonical_benchmarks().size()
              << " files):\n";
    for (const embred::BenchmarkInfo& b : embred::canonical_benchmarks())
        std::cout << "  " << b.name << "  pairs=" << b.pair_count << "\n    " << b.url << '\n';
    std::cout << "scripts/fetch_datasets.sh downloads all of them.\n";

    if (opt.verify_dir.empty()) return kExitOk;

    std::size_t bad = 0;
    for (const embred::BenchmarkInfo& b : embred::canonical_benchmarks()) {
        const std::filesystem::path p = std::filesystem::path(opt.verify_dir) / b.filename;
        if (!std::filesystem::exists(p)) {
            std::cout << "MISSING  " << b.name << " (" << p.string() << ")\n";
            ++bad;
            continue;
        }
        try {
            const embred::SimilarityDataset ds = embred::load_dataset(p, std::string(b.name));
            if (ds.pairs.size() != b.pair_count) {
                std::cout << "MISMATCH " << b.name << ": " << ds.pairs.size() << " pairs, expected "
                          << b.pair_count << '\n';
                ++bad;
            } else {
                std::cout << "OK       " << b.name << " (" << ds.pairs.size() << " pairs)\n";
            }
        } catch (const std::exception& e) {
            std::cout << "BAD      " << b.name << ": " << e.what() << '\n';
            ++bad;
        }
    }
    if (bad > 0)
        throw embred::IoError(std::to_string(bad) + " benchmark file(s) missing or invalid in " +
                              opt.verify_dir);
    std::cout << "all " << embred::canonical_benchmarks().size() << " benchmark files verified\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dimensionality reduction and similarity evaluation for word embeddings"};
    app.require_subcommand(1);

    ReduceOptions ropt;
    CLI::App* reduce = app.add_subcommand("reduce", "write reduced-dimension embeddings");
    reduce->add_option("-i,--input", ropt.input, "input embedding text file")->required();
    reduce->add_option("-o,--output", ropt.output, "output embedding text file")->required();
    reduce->add_option("--method", ropt.method, "algo | pca | p+pca | pca+p | ppa-only")
        ->default_val("algo");
    reduce->add_option("-n,--new-dim", ropt.new_dim, "target dimension N (default: input dim / 2)")
        ->check(CLI::NonNegativeNumber);
    reduce->add_option("-d,--threshold", ropt.threshold, "PPA threshold D")
        ->default_val(7)
        ->check(CLI::NonNegativeNumber);
    reduce->add_option("--expected-dim", ropt.expected_dim, "fail unless the input has this dimension")
        ->check(CLI::NonNegativeNumber);
    reduce->add_option("--precision", ropt.precision, "decimal places in the output")
        ->default_val(6)
        ->check(CLI::Range(0, 40));

    EvalOptions eopt;
    CLI::App* eval = app.add_subcommand("eval", "score embeddings on word-similarity benchmarks");
    eval->add_option("-i,--input", eopt.input, "embedding text file")->required();
    eval->add_option("-m,--manifest", eopt.manifest, "dataset manifest (name<TAB>path per line)")
        ->required();
    eval->add_option("--datasets-dir", eopt.datasets_dir,
                     "directory for relative manifest paths (default: manifest directory)")
        ->envname("EMBRED_DATASETS_DIR");
    eval->add_option("-o,--output", eopt.output, "report CSV path (default: stdout)");
    eval->add_option("--baseline", eopt.baseline, "earlier report CSV to compare against");
    eval->add_flag("--fold-case", eopt.fold_case, "retry OOV words lowercased");
    eval->add_option("--expected-dim", eopt.expected_dim, "fail unless the input has this dimension")
        ->check(CLI::NonNegativeNumber);

    VarianceOptions vopt;
    CLI::App* variance =
        app.add_subcommand("report-variance", "explained-variance fractions of top components");
    variance->add_option("-i,--input", vopt.input, "embedding text file")->required();
    variance->add_option("-o,--output", vopt.output, "CSV path (default: stdout)");
    variance->add_option("--top-k", vopt.top_k, "number of leading components")
        ->default_val(20)
        ->check(CLI::PositiveNumber);
    variance->add_option("--method", vopt.method,
                         "report after applying this reduction (algo | pca | p+pca | pca+p | ppa-only)");
    variance->add_option("-n,--new-dim", vopt.new_dim, "target dimension for --method")
        ->check(CLI::NonNegativeNumber);
    variance->add_option("-d,--threshold", vopt.threshold, "PPA threshold for --method")
        ->default_val(7)
        ->check(CLI::NonNegativeNumber);

    FetchOptions fopt;
    CLI::App* fetch =
        app.add_subcommand("fetch-datasets", "print canonical benchmark URLs; verify local copies");
    fetch->add_option("--verify", fopt.verify_dir, "directory holding the downloaded files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitArg;
    }

    try {
        if (reduce->parsed()) return cmd_reduce(ropt);
        if (eval->parsed()) return cmd_eval(eopt);
        if (variance->parsed()) return cmd_report_variance(vopt);
        if (fetch->parsed()) return cmd_fetch_datasets(fopt);
    } catch (const embred::ArgError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitArg;
    } catch (const embred::NumericError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const embred::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitArg;
}
