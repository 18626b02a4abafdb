// Batch front end: build a similarity matrix from points, a precomputed
// matrix, or a route network; run the connection-center evolution; and
// serialize the resulting platforms, suggestions, and traces.
//
// Talks to the engine exclusively through the C API in cce/cce.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cce/cce.h"

using nlohmann::json;

namespace {

struct PointsDeleter {
    void operator()(cce_points* p) const { cce_points_free(p); }
};
struct MatrixDeleter {
    void operator()(cce_matrix* m) const { cce_matrix_free(m); }
};
struct TraceDeleter {
    void operator()(cce_trace* t) const { cce_trace_free(t); }
};

using PointsHandle = std::unique_ptr<cce_points, PointsDeleter>;
using MatrixHandle = std::unique_ptr<cce_matrix, MatrixDeleter>;
using TraceHandle = std::unique_ptr<cce_trace, TraceDeleter>;

[[noreturn]] void die(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    std::exit(2);
}

void check(cce_status status) {
    if (status != CCE_OK) die(cce_last_error());
}

struct Options {
    std::string input;
    std::string format;
    std::string sigma;
    std::string normalize = "none";
    bool id_column = false;
    int k_max = 1000;
    double epsilon = 0.0;
    int noise_threshold = 2;
    int min_platform = 2;
    std::string detail = "platforms";
    std::string output = "-";
    std::string trace_output;
    int k = 64;

    std::optional<double> resolved_sigma;  // filled for points input
};

void add_common_options(CLI::App* cmd, Options* opt) {
    cmd->add_option("--input", opt->input, "input file")->required();
    cmd->add_option("--format", opt->format, "input format")
        ->required()
        ->check(CLI::IsMember({"points", "matrix", "routes"}));
    cmd->add_option("--sigma", opt->sigma,
                    "Gaussian kernel width for points input; a number or 'auto' "
                    "(median pairwise distance)");
    cmd->add_flag("--id-column", opt->id_column,
                  "treat the first CSV column as the point identifier");
    cmd->add_option("--normalize", opt->normalize, "similarity normalization")
        ->check(CLI::IsMember({"none", "njw"}));
    cmd->add_option("--k-max", opt->k_max, "largest power order to evolve to")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--epsilon", opt->epsilon, "tolerance in the center inequality")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--noise-threshold", opt->noise_threshold,
                    "clusters of at most this size are reported as noise (0 disables)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--min-platform", opt->min_platform, "shortest reported platform")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--output", opt->output, "output path, '-' for stdout");
}

MatrixHandle load_matrix(Options& opt) {
    cce_matrix* raw = nullptr;
    if (opt.format == "points") {
        if (opt.sigma.empty()) die(opt.input + ": points input requires --sigma");
        cce_points* pts = nullptr;
        check(cce_points_load_csv(opt.input.c_str(), opt.id_column ? 1 : 0, &pts));
        PointsHandle points(pts);

        double sigma = 0.0;
        if (opt.sigma == "auto") {
            check(cce_points_auto_sigma(points.get(), &sigma));
        } else {
            try {
                std::size_t used = 0;
                sigma = std::stod(opt.sigma, &used);
                if (used != opt.sigma.size()) throw std::invalid_argument(opt.sigma);
            } catch (const std::exception&) {
                die("--sigma must be a number or 'auto', got '" + opt.sigma + "'");
            }
        }
        opt.resolved_sigma = sigma;
        check(cce_matrix_gaussian(points.get(), sigma, &raw));
    } else if (opt.format == "matrix") {
        check(cce_matrix_load_csv(opt.input.c_str(), &raw));
    } else {
        check(cce_matrix_load_routes(opt.input.c_str(), &raw));
    }

    MatrixHandle matrix(raw);
    if (opt.normalize == "njw") {
        cce_matrix* normalized = nullptr;
        check(cce_matrix_njw_normalize(matrix.get(), &normalized));
        matrix.reset(normalized);
    }
    return matrix;
}

json config_echo(const Options& opt) {
    json cfg{{"input", opt.input},
             {"format", opt.format},
             {"normalize", opt.normalize},
             {"k_max", opt.k_max},
             {"epsilon", opt.epsilon},
             {"noise_threshold", opt.noise_threshold},
             {"min_platform", opt.min_platform},
             {"detail", opt.detail}};
    cfg["sigma"] = opt.sigma.empty() ? json(nullptr) : json(opt.sigma);
    if (opt.resolved_sigma) cfg["sigma_value"] = *opt.resolved_sigma;
    return cfg;
}

const char* stop_reason_name(cce_stop_reason reason) {
    switch (reason) {
        case CCE_STOP_COLLAPSED_TO_ONE: return "collapsed-to-one";
        case CCE_STOP_REACHED_K_MAX: return "reached-k-max";
        case CCE_STOP_ZERO_MATRIX: break;
    }
    return "zero-matrix";
}

int filtered_count(const cce_trace* trace, int k, int threshold) {
    if (threshold <= 0) return cce_trace_cluster_count(trace, k);
    int count = 0;
    check(cce_trace_filtered(trace, k, threshold, nullptr, &count));
    return count;
}

json snapshot_json(const cce_trace* trace, int k, int threshold) {
    const int n = cce_trace_order(trace);
    std::vector<int> centers(cce_trace_center_count(trace, k));
    std::vector<int> labels(n);
    check(cce_trace_copy_centers(trace, k, centers.data()));
    check(cce_trace_copy_labels(trace, k, labels.data()));

    json snap{{"k", k},
              {"centers", centers},
              {"labels", labels},
              {"n_clusters_raw", cce_trace_cluster_count(trace, k)}};

    std::vector<int> noise;
    int n_filtered = cce_trace_cluster_count(trace, k);
    if (threshold > 0) {
        std::vector<int> filtered_labels(n);
        check(cce_trace_filtered(trace, k, threshold, filtered_labels.data(), &n_filtered));
        for (int i = 0; i < n; ++i) {
            if (filtered_labels[i] == CCE_NOISE_LABEL) noise.push_back(i);
        }
    }
    snap["n_clusters_filtered"] = n_filtered;
    snap["noise"] = noise;
    return snap;
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) die(path + ": cannot open for writing");
    out << text;
}

std::string trace_csv(const cce_trace* trace, int threshold) {
    std::string csv = "k,n_clusters_raw,n_clusters_filtered\n";
    const int len = cce_trace_length(trace);
    for (int k = 1; k <= len; ++k) {
        csv += std::to_string(k);
        csv += ',';
        csv += std::to_string(cce_trace_cluster_count(trace, k));
        csv += ',';
        csv += std::to_string(filtered_count(trace, k, threshold));
        csv += '\n';
    }
    return csv;
}

struct Analysis {
    std::vector<cce_platform> platforms;
    std::vector<cce_suggestion> suggestions;
    std::vector<int> skipped;
};

Analysis analyze(const cce_trace* trace, const Options& opt) {
    Analysis result;

    cce_platform* platforms = nullptr;
    int n_platforms = 0;
    check(cce_detect_platforms(trace, opt.min_platform, opt.noise_threshold, &platforms,
                               &n_platforms));
    result.platforms.assign(platforms, platforms + n_platforms);
    cce_platforms_free(platforms);

    cce_suggestion* suggestions = nullptr;
    int n_suggestions = 0;
    check(cce_suggest_counts(result.platforms.data(), n_platforms, &suggestions, &n_suggestions));
    result.suggestions.assign(suggestions, suggestions + n_suggestions);
    cce_suggestions_free(suggestions);

    int* skipped = nullptr;
    int n_skipped = 0;
    check(cce_skipped_counts(trace, &skipped, &n_skipped));
    result.skipped.assign(skipped, skipped + n_skipped);
    cce_ints_free(skipped);

    return result;
}

json analysis_json(const Analysis& analysis) {
    json platforms = json::array();
    for (const auto& p : analysis.platforms) {
        platforms.push_back({{"k_start", p.k_start},
                             {"k_end", p.k_end},
                             {"count", p.cluster_count},
                             {"partition_stable", p.partition_stable != 0}});
    }
    json suggestions = json::array();
    for (const auto& s : analysis.suggestions) {
        suggestions.push_back({{"count", s.cluster_count}, {"total_length", s.total_length}});
    }
    return json{{"platforms", platforms}, {"suggestions", suggestions},
                {"skipped", analysis.skipped}};
}

int run_cluster(Options& opt) {
    MatrixHandle matrix = load_matrix(opt);
    cce_trace* raw_trace = nullptr;
    check(cce_run_evolution(matrix.get(), opt.k_max, opt.epsilon, &raw_trace));
    TraceHandle trace(raw_trace);

    const Analysis analysis = analyze(trace.get(), opt);

    json doc;
    doc["config"] = config_echo(opt);
    const int n = cce_trace_order(trace.get());
    doc["n_points"] = n;
    json ids = json::array();
    for (int i = 0; i < n; ++i) ids.push_back(cce_matrix_label(matrix.get(), i));
    doc["point_ids"] = ids;

    const int len = cce_trace_length(trace.get());
    json counts = json::array();
    for (int k = 1; k <= len; ++k) {
        counts.push_back({{"k", k},
                          {"n_clusters_raw", cce_trace_cluster_count(trace.get(), k)},
                          {"n_clusters_filtered",
                           filtered_count(trace.get(), k, opt.noise_threshold)}});
    }
    doc["trace"] = {{"length", len},
                    {"stop_reason", stop_reason_name(cce_trace_stop_reason(trace.get()))},
                    {"counts", counts}};

    json snapshots = json::array();
    if (opt.detail == "all") {
        for (int k = 1; k <= len; ++k) {
            snapshots.push_back(snapshot_json(trace.get(), k, opt.noise_threshold));
        }
    } else {
        // One representative snapshot per platform, taken at its first k.
        for (const auto& p : analysis.platforms) {
            snapshots.push_back(snapshot_json(trace.get(), p.k_start, opt.noise_threshold));
        }
    }
    doc["snapshots"] = snapshots;
    doc.update(analysis_json(analysis));

    if (opt.format == "routes") {
        json diagonal = json::array();
        for (int i = 0; i < n; ++i) diagonal.push_back(cce_matrix_get(matrix.get(), i, i));
        doc["matrix_summary"] = {{"order", n}, {"labels", ids}, {"diagonal", diagonal}};
    }

    write_text(opt.output, doc.dump(2) + "\n");
    if (!opt.trace_output.empty()) {
        write_text(opt.trace_output, trace_csv(trace.get(), opt.noise_threshold));
    }
    return 0;
}

int run_trace(Options& opt) {
    MatrixHandle matrix = load_matrix(opt);
    cce_trace* raw_trace = nullptr;
    check(cce_run_evolution(matrix.get(), opt.k_max, opt.epsilon, &raw_trace));
    TraceHandle trace(raw_trace);
    write_text(opt.output, trace_csv(trace.get(), opt.noise_threshold));
    return 0;
}

int run_verify(Options& opt) {
    MatrixHandle matrix = load_matrix(opt);
    const int n = cce_matrix_order(matrix.get());

    cce_theorem_report report{};
    std::vector<double> eigvec(n);
    check(cce_verify_theorem(matrix.get(), opt.k, eigvec.data(), &report));

    std::string flag = "ok";
    if (!report.dominant_simple) {
        flag = "non-convergent: dominant eigenvalue not simple";
    } else if (!report.connected) {
        flag = "non-convergent: similarity graph is disconnected";
    } else if (!report.eigen.converged) {
        flag = "non-convergent: power iteration did not reach tolerance";
    }

    json doc{{"config", config_echo(opt)},
             {"k", report.k},
             {"max_deviation", report.max_deviation},
             {"gap_ratio", report.gap_ratio},
             {"connected", report.connected != 0},
             {"dominant_simple", report.dominant_simple != 0},
             {"converged", report.converged != 0},
             {"flag", flag},
             {"eigen", {{"eigenvalue", report.eigen.eigenvalue},
                        {"residual", report.eigen.residual},
                        {"iterations", report.eigen.iterations},
                        {"converged", report.eigen.converged != 0},
                        {"vector", eigvec}}}};
    write_text(opt.output, doc.dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"connection-center evolution clustering"};
    app.require_subcommand(1);

    Options cluster_opt, trace_opt, verify_opt;

    CLI::App* cluster = app.add_subcommand(
        "cluster", "run the evolution and write a result document");
    add_common_options(cluster, &cluster_opt);
    cluster->add_option("--detail", cluster_opt.detail,
                        "which per-k snapshots to include in the document")
        ->check(CLI::IsMember({"platforms", "all"}));
    cluster->add_option("--trace-output", cluster_opt.trace_output,
                        "also write the count-vs-k curve as CSV");

    CLI::App* trace = app.add_subcommand(
        "trace", "write the cluster-count-vs-k curve as CSV");
    add_common_options(trace, &trace_opt);

    CLI::App* verify = app.add_subcommand(
        "verify", "check the power-diagonal / dominant-eigenvector identity");
    add_common_options(verify, &verify_opt);
    verify->add_option("--k", verify_opt.k, "power order to check at")
        ->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    if (cluster->parsed()) return run_cluster(cluster_opt);
    if (trace->parsed()) return run_trace(trace_opt);
    return run_verify(verify_opt);
}
