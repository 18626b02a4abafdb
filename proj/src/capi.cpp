#include "cce/cce.h"

#include <cstring>
#include <string>
#include <utility>

#include "analysis.hpp"
#include "errors.hpp"
#include "evolution.hpp"
#include "io.hpp"
#include "similarity.hpp"
#include "spectral.hpp"

struct cce_points {
    cce::PointSet set;
};

struct cce_matrix {
    cce::SimilarityMatrix matrix;
};

struct cce_trace {
    cce::EvolutionTrace trace;
    int order;
};

namespace {

thread_local std::string g_last_error;

cce_status fail(cce_status status, const char* message) {
    g_last_error = message;
    return status;
}

// Runs fn, translating exceptions into status codes + the thread message.
template <typename Fn>
cce_status guarded(Fn&& fn) {
    try {
        std::forward<Fn>(fn)();
        return CCE_OK;
    } catch (const cce::IoError& e) {
        return fail(CCE_ERROR_IO, e.what());
    } catch (const cce::ParamError& e) {
        return fail(CCE_ERROR_PARAM, e.what());
    } catch (const cce::ValidationError& e) {
        return fail(CCE_ERROR_VALIDATION, e.what());
    } catch (const std::exception& e) {
        return fail(CCE_ERROR_NUMERIC, e.what());
    }
}

cce_status require(bool ok, const char* message) {
    return ok ? CCE_OK : fail(CCE_ERROR_PARAM, message);
}

const cce::ClusterSnapshot* snapshot_for(const cce_trace* t, int k) {
    if (t == nullptr || k < 1 || k > static_cast<int>(t->trace.snapshots.size())) return nullptr;
    return &t->trace.snapshots[k - 1];
}

}  // namespace

extern "C" {

const char* cce_last_error(void) { return g_last_error.c_str(); }

cce_status cce_points_create(const double* coords, int n, int dim, cce_points** out) {
    if (auto s = require(coords && out && n > 0 && dim > 0,
                         "cce_points_create: null buffer or non-positive size"))
        return s;
    return guarded([&] {
        std::vector<double> buf(coords, coords + static_cast<std::size_t>(n) * dim);
        *out = new cce_points{cce::PointSet::create(std::move(buf), dim)};
    });
}

cce_status cce_points_load_csv(const char* path, int leading_id_column, cce_points** out) {
    if (auto s = require(path && out, "cce_points_load_csv: null path or out")) return s;
    return guarded([&] {
        *out = new cce_points{cce::load_points_csv(path, leading_id_column != 0)};
    });
}

void cce_points_free(cce_points* pts) { delete pts; }

int cce_points_count(const cce_points* pts) { return pts ? pts->set.size() : 0; }

int cce_points_dim(const cce_points* pts) { return pts ? pts->set.dim() : 0; }

cce_status cce_points_auto_sigma(const cce_points* pts, double* out_sigma) {
    if (auto s = require(pts && out_sigma, "cce_points_auto_sigma: null argument")) return s;
    return guarded([&] { *out_sigma = cce::auto_sigma(pts->set); });
}

cce_status cce_matrix_gaussian(const cce_points* pts, double sigma, cce_matrix** out) {
    if (auto s = require(pts && out, "cce_matrix_gaussian: null argument")) return s;
    return guarded([&] { *out = new cce_matrix{cce::gaussian_kernel(pts->set, sigma)}; });
}

cce_status cce_matrix_from_entries(const double* entries, int n, cce_matrix** out) {
    if (auto s = require(entries && out && n > 0,
                         "cce_matrix_from_entries: null buffer or non-positive order"))
        return s;
    return guarded([&] {
        cce::Matrix m(n);
        std::memcpy(m.data(), entries, sizeof(double) * static_cast<std::size_t>(n) * n);
        *out = new cce_matrix{cce::SimilarityMatrix::from_matrix(std::move(m))};
    });
}

cce_status cce_matrix_load_csv(const char* path, cce_matrix** out) {
    if (auto s = require(path && out, "cce_matrix_load_csv: null path or out")) return s;
    return guarded([&] { *out = new cce_matrix{cce::load_similarity_csv(path)}; });
}

cce_status cce_matrix_load_routes(const char* path, cce_matrix** out) {
    if (auto s = require(path && out, "cce_matrix_load_routes: null path or out")) return s;
    return guarded([&] { *out = new cce_matrix{cce::from_routes(cce::load_routes(path))}; });
}

cce_status cce_matrix_njw_normalize(const cce_matrix* m, cce_matrix** out) {
    if (auto s = require(m && out, "cce_matrix_njw_normalize: null argument")) return s;
    return guarded([&] { *out = new cce_matrix{cce::njw_normalize(m->matrix)}; });
}

void cce_matrix_free(cce_matrix* m) { delete m; }

int cce_matrix_order(const cce_matrix* m) { return m ? m->matrix.order() : 0; }

double cce_matrix_get(const cce_matrix* m, int i, int j) {
    if (m == nullptr || i < 0 || j < 0 || i >= m->matrix.order() || j >= m->matrix.order()) {
        return 0.0;
    }
    return m->matrix.at(i, j);
}

const char* cce_matrix_label(const cce_matrix* m, int i) {
    if (m == nullptr || i < 0 || i >= m->matrix.order()) return "";
    return m->matrix.labels()[i].c_str();
}

cce_status cce_run_evolution(const cce_matrix* m, int k_max, double epsilon, cce_trace** out) {
    if (auto s = require(m && out, "cce_run_evolution: null argument")) return s;
    return guarded([&] {
        *out = new cce_trace{cce::run_evolution(m->matrix, k_max, epsilon), m->matrix.order()};
    });
}

void cce_trace_free(cce_trace* t) { delete t; }

int cce_trace_length(const cce_trace* t) {
    return t ? static_cast<int>(t->trace.snapshots.size()) : 0;
}

int cce_trace_order(const cce_trace* t) { return t ? t->order : 0; }

cce_stop_reason cce_trace_stop_reason(const cce_trace* t) {
    if (t == nullptr) return CCE_STOP_ZERO_MATRIX;
    switch (t->trace.stop_reason) {
        case cce::StopReason::CollapsedToOne: return CCE_STOP_COLLAPSED_TO_ONE;
        case cce::StopReason::ReachedKMax: return CCE_STOP_REACHED_K_MAX;
        case cce::StopReason::ZeroMatrix: break;
    }
    return CCE_STOP_ZERO_MATRIX;
}

int cce_trace_cluster_count(const cce_trace* t, int k) {
    const auto* snap = snapshot_for(t, k);
    return snap ? snap->cluster_count : 0;
}

int cce_trace_center_count(const cce_trace* t, int k) {
    const auto* snap = snapshot_for(t, k);
    return snap ? static_cast<int>(snap->centers.size()) : 0;
}

cce_status cce_trace_copy_centers(const cce_trace* t, int k, int* out) {
    const auto* snap = snapshot_for(t, k);
    if (auto s = require(snap != nullptr && out,
                         "cce_trace_copy_centers: bad trace, k out of range, or null out"))
        return s;
    std::memcpy(out, snap->centers.data(), sizeof(int) * snap->centers.size());
    return CCE_OK;
}

cce_status cce_trace_copy_labels(const cce_trace* t, int k, int* out) {
    const auto* snap = snapshot_for(t, k);
    if (auto s = require(snap != nullptr && out,
                         "cce_trace_copy_labels: bad trace, k out of range, or null out"))
        return s;
    std::memcpy(out, snap->labels.data(), sizeof(int) * snap->labels.size());
    return CCE_OK;
}

cce_status cce_trace_filtered(const cce_trace* t, int k, int max_noise_size, int* labels_out,
                              int* count_out) {
    const auto* snap = snapshot_for(t, k);
    if (auto s = require(snap != nullptr, "cce_trace_filtered: bad trace or k out of range"))
        return s;
    return guarded([&] {
        const cce::FilterResult filtered = cce::filter_noise(*snap, max_noise_size);
        if (labels_out != nullptr) {
            std::memcpy(labels_out, filtered.snapshot.labels.data(),
                        sizeof(int) * filtered.snapshot.labels.size());
        }
        if (count_out != nullptr) *count_out = filtered.snapshot.cluster_count;
    });
}

cce_status cce_detect_platforms(const cce_trace* t, int min_length, int noise_threshold,
                                cce_platform** out, int* out_len) {
    if (auto s = require(t && out && out_len, "cce_detect_platforms: null argument")) return s;
    return guarded([&] {
        const std::vector<cce::ClusterSnapshot>* snapshots = &t->trace.snapshots;
        std::vector<cce::ClusterSnapshot> filtered;
        if (noise_threshold > 0) {
            filtered.reserve(snapshots->size());
            for (const auto& snap : *snapshots) {
                filtered.push_back(cce::filter_noise(snap, noise_threshold).snapshot);
            }
            snapshots = &filtered;
        }
        const auto platforms = cce::detect_platforms(*snapshots, min_length);
        *out_len = static_cast<int>(platforms.size());
        *out = platforms.empty() ? nullptr : new cce_platform[platforms.size()];
        for (std::size_t i = 0; i < platforms.size(); ++i) {
            (*out)[i] = {platforms[i].k_start, platforms[i].k_end, platforms[i].cluster_count,
                         platforms[i].partition_stable ? 1 : 0};
        }
    });
}

void cce_platforms_free(cce_platform* platforms) { delete[] platforms; }

cce_status cce_suggest_counts(const cce_platform* platforms, int len, cce_suggestion** out,
                              int* out_len) {
    if (auto s = require(out && out_len && (platforms != nullptr || len == 0) && len >= 0,
                         "cce_suggest_counts: null argument"))
        return s;
    return guarded([&] {
        std::vector<cce::Platform> input(static_cast<std::size_t>(len));
        for (int i = 0; i < len; ++i) {
            input[i] = {platforms[i].k_start, platforms[i].k_end, platforms[i].cluster_count,
                        platforms[i].partition_stable != 0};
        }
        const auto suggestions = cce::suggest_counts(input);
        *out_len = static_cast<int>(suggestions.size());
        *out = suggestions.empty() ? nullptr : new cce_suggestion[suggestions.size()];
        for (std::size_t i = 0; i < suggestions.size(); ++i) {
            (*out)[i] = {suggestions[i].cluster_count, suggestions[i].total_length};
        }
    });
}

void cce_suggestions_free(cce_suggestion* suggestions) { delete[] suggestions; }

cce_status cce_skipped_counts(const cce_trace* t, int** out, int* out_len) {
    if (auto s = require(t && out && out_len, "cce_skipped_counts: null argument")) return s;
    return guarded([&] {
        const auto skipped = cce::skipped_counts(t->trace);
        *out_len = static_cast<int>(skipped.size());
        *out = skipped.empty() ? nullptr : new int[skipped.size()];
        if (!skipped.empty()) std::memcpy(*out, skipped.data(), sizeof(int) * skipped.size());
    });
}

void cce_ints_free(int* values) { delete[] values; }

cce_status cce_principal_eigenvector(const cce_matrix* m, double tol, int max_iter,
                                     double* vec_out, cce_eigen_report* report_out) {
    if (auto s = require(m && report_out, "cce_principal_eigenvector: null argument")) return s;
    return guarded([&] {
        const cce::EigenEstimate est = cce::principal_eigenvector(m->matrix, tol, max_iter);
        *report_out = {est.eigenvalue, est.residual, est.iterations, est.converged ? 1 : 0};
        if (vec_out != nullptr) {
            std::memcpy(vec_out, est.vector.data(), sizeof(double) * est.vector.size());
        }
    });
}

cce_status cce_verify_theorem(const cce_matrix* m, int k, double* eigvec_out,
                              cce_theorem_report* out) {
    if (auto s = require(m && out, "cce_verify_theorem: null argument")) return s;
    return guarded([&] {
        const cce::TheoremReport report = cce::verify_theorem(m->matrix, k);
        out->k = report.k;
        out->max_deviation = report.max_deviation;
        out->gap_ratio = report.gap_ratio;
        out->connected = report.connected ? 1 : 0;
        out->dominant_simple = report.dominant_simple ? 1 : 0;
        out->converged = report.converged ? 1 : 0;
        out->eigen = {report.eigen.eigenvalue, report.eigen.residual, report.eigen.iterations,
                      report.eigen.converged ? 1 : 0};
        if (eigvec_out != nullptr) {
            std::memcpy(eigvec_out, report.eigen.vector.data(),
                        sizeof(double) * report.eigen.vector.size());
        }
    });
}

}  // extern "C"
