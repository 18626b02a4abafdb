#pragma once

#include <string>
#include <vector>

#include "dense.hpp"

namespace cce {

// A set of n points in R^dim with unique string identifiers.
// Coordinates are stored row-major (point i occupies [i*dim, (i+1)*dim)).
class PointSet {
public:
    // Validates shape, finiteness and identifier uniqueness. When ids is
    // empty, points are named by their 0-based index.
    static PointSet create(std::vector<double> coords, int dim,
                           std::vector<std::string> ids = {});

    int size() const { return n_; }
    int dim() const { return dim_; }
    const double* point(int i) const { return coords_.data() + static_cast<std::size_t>(i) * dim_; }
    const std::vector<std::string>& ids() const { return ids_; }

    double distance(int i, int j) const;

private:
    PointSet() = default;
    int n_ = 0;
    int dim_ = 0;
    std::vector<double> coords_;
    std::vector<std::string> ids_;
};

// Symmetric nonnegative pairwise similarity matrix with per-point labels.
// Instances are always exactly symmetric, finite and nonnegative.
class SimilarityMatrix {
public:
    // Accepts a square matrix that is symmetric within a relative tolerance
    // of 1e-12, then stores it exactly symmetrized via (S + S^T)/2.
    // Violations (asymmetry, negative or non-finite entries, label count
    // mismatch) raise ValidationError naming the offending indices.
    static SimilarityMatrix from_matrix(Matrix entries,
                                        std::vector<std::string> labels = {});

    int order() const { return m_.order(); }
    double at(int i, int j) const { return m_(i, j); }
    const Matrix& entries() const { return m_; }
    const std::vector<std::string>& labels() const { return labels_; }

private:
    friend SimilarityMatrix gaussian_kernel(const PointSet&, double);
    friend SimilarityMatrix njw_normalize(const SimilarityMatrix&);
    friend class RouteNetwork;

    // Trusted constructor for matrices that are exactly symmetric by build.
    SimilarityMatrix(Matrix m, std::vector<std::string> labels);

    Matrix m_;
    std::vector<std::string> labels_;
};

// A set of stations and the routes that connect them. Each route is an
// ordered sequence of at least two distinct stations; the first stop is the
// beginning station and the last stop the terminal station.
class RouteNetwork {
public:
    static RouteNetwork create(std::vector<std::string> stations,
                               std::vector<std::vector<std::string>> routes);

    int station_count() const { return static_cast<int>(stations_.size()); }
    const std::vector<std::string>& stations() const { return stations_; }
    const std::vector<std::vector<int>>& routes() const { return routes_; }

    // Similarity by route counting: the off-diagonal s_ij is the number of
    // route segments whose consecutive stops are {i, j} (undirected); the
    // diagonal accumulates, per route, the station count of the route for
    // its beginning and terminal stations and 2 for every intermediate stop.
    // Stations on no route get an all-zero row.
    SimilarityMatrix to_similarity() const;

private:
    RouteNetwork() = default;
    std::vector<std::string> stations_;
    std::vector<std::vector<int>> routes_;  // station indices per route
};

// s_ij = exp(-||v_i - v_j||^2 / sigma^2). The diagonal is exactly 1 and
// every off-diagonal entry lies in [0, 1], so the result is diagonally
// maximal. sigma must be positive.
SimilarityMatrix gaussian_kernel(const PointSet& points, double sigma);

// Median of all pairwise distances; a pragmatic default for the kernel
// width. Fails when fewer than two points exist or all distances are zero.
double auto_sigma(const PointSet& points);

// Symmetric degree normalization D^(-1/2) S D^(-1/2) with D the diagonal of
// row sums. The diagonal is kept as-is. A zero row sum is an error naming
// the isolated point.
SimilarityMatrix njw_normalize(const SimilarityMatrix& s);

inline SimilarityMatrix from_routes(const RouteNetwork& net) { return net.to_similarity(); }

}  // namespace cce
