/*
 * cce — clustering by connection-center evolution.
 *
 * C interface of the shared library. Handles are opaque; every fallible
 * call returns a cce_status and, on failure, leaves a message retrievable
 * with cce_last_error() in the calling thread. Objects returned through
 * out-parameters are owned by the caller and released with the matching
 * *_free function. Point and matrix indices are 0-based; power orders (k)
 * are 1-based.
 */
#ifndef CCE_H
#define CCE_H

#if defined(_WIN32)
#  define CCE_API __declspec(dllexport)
#else
#  define CCE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cce_status {
    CCE_OK = 0,
    CCE_ERROR_PARAM = 1,      /* parameter out of range or null handle */
    CCE_ERROR_VALIDATION = 2, /* input data violates an invariant */
    CCE_ERROR_IO = 3,         /* file missing or malformed */
    CCE_ERROR_NUMERIC = 4     /* degenerate numeric input (zero matrix, ...) */
} cce_status;

typedef enum cce_stop_reason {
    CCE_STOP_COLLAPSED_TO_ONE = 0,
    CCE_STOP_REACHED_K_MAX = 1,
    CCE_STOP_ZERO_MATRIX = 2
} cce_stop_reason;

/* Label of points removed as noise by the filtered queries. */
#define CCE_NOISE_LABEL (-1)

typedef struct cce_points cce_points;   /* a point set in R^dim */
typedef struct cce_matrix cce_matrix;   /* a validated similarity matrix */
typedef struct cce_trace cce_trace;     /* a full evolution trace */

/* Message for the most recent failure in this thread. Never null; valid
 * until the next failing call in the same thread. */
CCE_API const char* cce_last_error(void);

/* ---------------- input construction ---------------- */

/* coords is row-major: point i occupies coords[i*dim .. i*dim+dim-1]. */
CCE_API cce_status cce_points_create(const double* coords, int n, int dim, cce_points** out);

/* Point CSV: one row per point, comma-separated decimals; a first row with
 * non-numeric content is treated as a header. leading_id_column != 0 reads
 * the first field of each row as the point identifier. */
CCE_API cce_status cce_points_load_csv(const char* path, int leading_id_column, cce_points** out);

CCE_API void cce_points_free(cce_points* pts);
CCE_API int  cce_points_count(const cce_points* pts);
CCE_API int  cce_points_dim(const cce_points* pts);

/* Median pairwise distance; a pragmatic default kernel width. */
CCE_API cce_status cce_points_auto_sigma(const cce_points* pts, double* out_sigma);

/* Gaussian kernel: s_ij = exp(-||v_i - v_j||^2 / sigma^2), sigma > 0. */
CCE_API cce_status cce_matrix_gaussian(const cce_points* pts, double sigma, cce_matrix** out);

/* Validates a row-major n*n buffer: finite, nonnegative, symmetric within
 * 1e-12 relative tolerance; stored exactly symmetrized. */
CCE_API cce_status cce_matrix_from_entries(const double* entries, int n, cce_matrix** out);

/* Matrix CSV: n rows of n comma-separated decimals. */
CCE_API cce_status cce_matrix_load_csv(const char* path, cce_matrix** out);

/* Route file: one route per line, comma-separated station identifiers in
 * stop order; blank lines and '#' comments ignored. Builds the
 * route-counting similarity: off-diagonal entries count direct route
 * segments between two stations; each route adds its station count to the
 * diagonal of its beginning and terminal stations and 2 to every
 * intermediate stop. */
CCE_API cce_status cce_matrix_load_routes(const char* path, cce_matrix** out);

/* Symmetric degree normalization D^(-1/2) S D^(-1/2); diagonal kept. */
CCE_API cce_status cce_matrix_njw_normalize(const cce_matrix* m, cce_matrix** out);

CCE_API void        cce_matrix_free(cce_matrix* m);
CCE_API int         cce_matrix_order(const cce_matrix* m);
CCE_API double      cce_matrix_get(const cce_matrix* m, int i, int j);
CCE_API const char* cce_matrix_label(const cce_matrix* m, int i);

/* ---------------- evolution ---------------- */

/* Runs the evolution: for each k = 1, 2, ... find the diagonally maximal
 * points of S^k (within epsilon) as centers and assign every other point
 * to the center of greatest relative connectivity. Stops at the first k
 * with one cluster, or at k_max. */
CCE_API cce_status cce_run_evolution(const cce_matrix* m, int k_max, double epsilon,
                                     cce_trace** out);

CCE_API void cce_trace_free(cce_trace* t);
CCE_API int  cce_trace_length(const cce_trace* t); /* number of snapshots */
CCE_API int  cce_trace_order(const cce_trace* t);  /* number of points */
CCE_API cce_stop_reason cce_trace_stop_reason(const cce_trace* t);

/* Per-k queries; k ranges over 1 .. cce_trace_length(). */
CCE_API int cce_trace_cluster_count(const cce_trace* t, int k);
CCE_API int cce_trace_center_count(const cce_trace* t, int k);
CCE_API cce_status cce_trace_copy_centers(const cce_trace* t, int k, int* out);
CCE_API cce_status cce_trace_copy_labels(const cce_trace* t, int k, int* out);

/* Noise filtering: clusters of size <= max_noise_size are removed; their
 * members get CCE_NOISE_LABEL in labels_out (size n, may be null). The
 * filtered cluster count lands in count_out (may be null). */
CCE_API cce_status cce_trace_filtered(const cce_trace* t, int k, int max_noise_size,
                                      int* labels_out, int* count_out);

/* ---------------- analysis ---------------- */

typedef struct cce_platform {
    int k_start; /* inclusive */
    int k_end;   /* inclusive */
    int cluster_count;
    int partition_stable; /* labels identical across the interval */
} cce_platform;

typedef struct cce_suggestion {
    int cluster_count;
    int total_length;
} cce_suggestion;

/* Maximal runs of consecutive k with equal cluster count and length >=
 * min_length. noise_threshold > 0 detects platforms of the noise-filtered
 * counts; 0 uses the raw counts. The array is released with
 * cce_platforms_free and may come back empty (len 0, array null). */
CCE_API cce_status cce_detect_platforms(const cce_trace* t, int min_length, int noise_threshold,
                                        cce_platform** out, int* out_len);
CCE_API void cce_platforms_free(cce_platform* platforms);

/* Counts ranked by total platform length, longest first; count 1 is never
 * suggested. */
CCE_API cce_status cce_suggest_counts(const cce_platform* platforms, int len,
                                      cce_suggestion** out, int* out_len);
CCE_API void cce_suggestions_free(cce_suggestion* suggestions);

/* Cluster counts strictly between the first and last of the trace that
 * never occur, ascending. */
CCE_API cce_status cce_skipped_counts(const cce_trace* t, int** out, int* out_len);
CCE_API void cce_ints_free(int* values);

/* ---------------- spectral check ---------------- */

typedef struct cce_eigen_report {
    double eigenvalue; /* Rayleigh quotient */
    double residual;   /* ||S u - lambda u|| for the unit estimate u */
    int iterations;
    int converged;
} cce_eigen_report;

typedef struct cce_theorem_report {
    int k;
    double max_deviation; /* max |u_j/u_i - sqrt(s_jj^(k)/s_ii^(k))| over u_i > 0 */
    double gap_ratio;     /* |lambda_2| / lambda_1 estimate */
    int connected;
    int dominant_simple;
    int converged;
    cce_eigen_report eigen;
} cce_theorem_report;

/* Power iteration for the dominant eigenpair. vec_out (size n) may be
 * null. Hitting max_iter is flagged via report->converged, not an error. */
CCE_API cce_status cce_principal_eigenvector(const cce_matrix* m, double tol, int max_iter,
                                             double* vec_out, cce_eigen_report* report_out);

/* Checks how far diag(sqrt(S^k)), normalized, is from the dominant
 * eigenvector. Disconnected or spectrally degenerate input is reported
 * as non-convergent in the flags, not an error. eigvec_out may be null. */
CCE_API cce_status cce_verify_theorem(const cce_matrix* m, int k, double* eigvec_out,
                                      cce_theorem_report* out);

#ifdef __cplusplus
}
#endif

#endif /* CCE_H */
