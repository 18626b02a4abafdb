#pragma once

#include <vector>

#include "similarity.hpp"

namespace cce {

// Label given to points removed as noise by filter_noise.
inline constexpr int kNoiseLabel = -1;

// The current power S^k, uniformly rescaled so its maximum entry is 1
// (unless the matrix is identically zero). Rescaling never changes a
// center or assignment decision: the comparisons behind both are
// homogeneous of degree 0 in the matrix.
class PowerState {
public:
    explicit PowerState(const SimilarityMatrix& base);

    // Advances S^k to S^(k+1): multiply by the base matrix, rescale by the
    // maximum entry, keep the result exactly symmetric.
    void advance();

    int k() const { return k_; }
    const Matrix& matrix() const { return m_; }
    const SimilarityMatrix& base() const { return base_; }

private:
    int k_ = 1;
    Matrix m_;
    Matrix scratch_;
    SimilarityMatrix base_;
};

// Clustering decisions at one power order k.
struct ClusterSnapshot {
    int k = 0;
    std::vector<int> centers;  // ascending point indices
    std::vector<int> labels;   // labels[i] = assigned center, or kNoiseLabel
    int cluster_count = 0;

    bool operator==(const ClusterSnapshot&) const = default;
};

enum class StopReason {
    CollapsedToOne,  // first k with a single cluster
    ReachedKMax,
    ZeroMatrix,
};

struct EvolutionTrace {
    std::vector<ClusterSnapshot> snapshots;  // k = 1, 2, ... in order
    StopReason stop_reason = StopReason::ReachedKMax;

    std::vector<int> counts() const;
};

// Indices i with matrix[i][i] >= matrix[i][j] - epsilon for every j,
// in ascending order.
std::vector<int> find_centers(const Matrix& m, double epsilon = 0.0);
std::vector<int> find_centers(const PowerState& state, double epsilon = 0.0);

// Assigns every non-center j to the center c maximizing the relative
// connectivity matrix[c][j] / matrix[c][c]; ties break toward the lowest
// center index. A point with zero relative connectivity to every center
// becomes its own singleton and is added to the returned centers (this
// happens only for disconnected graphs). Centers with a zero diagonal have
// an all-zero row and stay isolated singletons.
ClusterSnapshot assign_points(const Matrix& m, int k, const std::vector<int>& centers);
ClusterSnapshot assign_points(const PowerState& state, const std::vector<int>& centers);

// find_centers + assign_points at the state's current power.
ClusterSnapshot snapshot_at(const PowerState& state, double epsilon = 0.0);

// Runs the full evolution: snapshots for k = 1 .. k_stop, where k_stop is
// the first k with a single cluster, or k_max, whichever comes first. An
// all-zero similarity matrix yields one snapshot of n isolated singletons
// with stop reason ZeroMatrix.
EvolutionTrace run_evolution(const SimilarityMatrix& s, int k_max = 1000, double epsilon = 0.0);

struct FilterResult {
    ClusterSnapshot snapshot;  // labels of noise points become kNoiseLabel
    std::vector<int> noise;    // ascending indices of removed points
};

// Removes clusters of size <= max_noise_size; their members are reported
// as noise, not reassigned.
FilterResult filter_noise(const ClusterSnapshot& snap, int max_noise_size = 2);

}  // namespace cce
