#include "evolution.hpp"

#include <algorithm>

#include "errors.hpp"

namespace cce {

PowerState::PowerState(const SimilarityMatrix& base) : m_(base.entries()), base_(base) {
    const double mx = m_.max_entry();
    if (mx > 0.0) m_.scale(1.0 / mx);
}

void PowerState::advance() {
    multiply_symmetric(m_, base_.entries(), scratch_);
    std::swap(m_, scratch_);
    const double mx = m_.max_entry();
    if (mx > 0.0) m_.scale(1.0 / mx);
    ++k_;
}

std::vector<int> EvolutionTrace::counts() const {
    std::vector<int> out;
    out.reserve(snapshots.size());
    for (const auto& s : snapshots) out.push_back(s.cluster_count);
    return out;
}

std::vector<int> find_centers(const Matrix& m, double epsilon) {
    if (epsilon < 0.0) throw ParamError("epsilon must be >= 0");
    const int n = m.order();
    std::vector<int> centers;
    for (int i = 0; i < n; ++i) {
        const double diag = m(i, i);
        bool is_center = true;
        for (int j = 0; j < n; ++j) {
            if (diag < m(i, j) - epsilon) {
                is_center = false;
                break;
            }
        }
        if (is_center) centers.push_back(i);
    }
    return centers;
}

std::vector<int> find_centers(const PowerState& state, double epsilon) {
    return find_centers(state.matrix(), epsilon);
}

ClusterSnapshot assign_points(const Matrix& m, int k, const std::vector<int>& centers) {
    const int n = m.order();
    ClusterSnapshot snap;
    snap.k = k;
    snap.labels.assign(n, kNoiseLabel);

    std::vector<bool> is_center(n, false);
    for (int c : centers) {
        is_center[c] = true;
        snap.labels[c] = c;
    }

    std::vector<int> singletons;
    for (int j = 0; j < n; ++j) {
        if (is_center[j]) continue;
        int best = -1;
        double best_rcon = 0.0;
        for (int c : centers) {
            const double diag = m(c, c);
            const double rcon = diag > 0.0 ? m(c, j) / diag : 0.0;
            if (rcon > best_rcon) {
                best_rcon = rcon;
                best = c;
            }
        }
        if (best < 0) {
            // Unreachable from any center: the point is its own cluster.
            snap.labels[j] = j;
            singletons.push_back(j);
        } else {
            snap.labels[j] = best;
        }
    }

    snap.centers = centers;
    snap.centers.insert(snap.centers.end(), singletons.begin(), singletons.end());
    std::sort(snap.centers.begin(), snap.centers.end());
    snap.cluster_count = static_cast<int>(snap.centers.size());
    return snap;
}

ClusterSnapshot assign_points(const PowerState& state, const std::vector<int>& centers) {
    return assign_points(state.matrix(), state.k(), centers);
}

ClusterSnapshot snapshot_at(const PowerState& state, double epsilon) {
    return assign_points(state, find_centers(state, epsilon));
}

EvolutionTrace run_evolution(const SimilarityMatrix& s, int k_max, double epsilon) {
    if (k_max < 1) throw ParamError("k_max must be >= 1, got " + std::to_string(k_max));
    if (epsilon < 0.0) throw ParamError("epsilon must be >= 0");

    EvolutionTrace trace;
    const int n = s.order();

    if (s.entries().max_entry() == 0.0) {
        ClusterSnapshot snap;
        snap.k = 1;
        snap.labels.resize(n);
        snap.centers.resize(n);
        for (int i = 0; i < n; ++i) {
            snap.labels[i] = i;
            snap.centers[i] = i;
        }
        snap.cluster_count = n;
        trace.snapshots.push_back(std::move(snap));
        trace.stop_reason = StopReason::ZeroMatrix;
        return trace;
    }

    PowerState state(s);
    for (;;) {
        ClusterSnapshot snap = snapshot_at(state, epsilon);
        trace.snapshots.push_back(std::move(snap));
        if (trace.snapshots.back().cluster_count == 1) {
            trace.stop_reason = StopReason::CollapsedToOne;
            break;
        }
        if (state.k() >= k_max) {
            trace.stop_reason = StopReason::ReachedKMax;
            break;
        }
        state.advance();
        if (state.matrix().max_entry() == 0.0) {
            // Cannot happen for a symmetric nonnegative nonzero base, kept
            // as a guard for the zero fixed point.
            trace.stop_reason = StopReason::ZeroMatrix;
            break;
        }
    }
    return trace;
}

FilterResult filter_noise(const ClusterSnapshot& snap, int max_noise_size) {
    if (max_noise_size < 0) throw ParamError("max_noise_size must be >= 0");
    const int n = static_cast<int>(snap.labels.size());

    std::vector<int> size_of(n, 0);
    for (int label : snap.labels) {
        if (label != kNoiseLabel) ++size_of[label];
    }

    FilterResult out;
    out.snapshot.k = snap.k;
    out.snapshot.labels = snap.labels;
    for (int c : snap.centers) {
        if (size_of[c] > max_noise_size) out.snapshot.centers.push_back(c);
    }
    std::vector<bool> kept(n, false);
    for (int c : out.snapshot.centers) kept[c] = true;
    for (int i = 0; i < n; ++i) {
        const int label = out.snapshot.labels[i];
        if (label == kNoiseLabel || !kept[label]) {
            out.snapshot.labels[i] = kNoiseLabel;
            out.noise.push_back(i);
        }
    }
    out.snapshot.cluster_count = static_cast<int>(out.snapshot.centers.size());
    return out;
}

}  // namespace cce
