#pragma once

#include <vector>

#include "evolution.hpp"

namespace cce {

// Maximal k-interval over which the cluster count is constant. Long
// platforms mark the cluster counts worth reporting.
struct Platform {
    int k_start = 0;  // inclusive
    int k_end = 0;    // inclusive
    int cluster_count = 0;
    bool partition_stable = false;  // labels identical across the interval

    int length() const { return k_end - k_start + 1; }
    bool operator==(const Platform&) const = default;
};

struct Suggestion {
    int cluster_count = 0;
    int total_length = 0;  // summed length of this count's platforms

    bool operator==(const Suggestion&) const = default;
};

// Maximal runs of consecutive k with equal cluster count and length >=
// min_length, in k order. Pass noise-filtered snapshots to detect
// platforms of the filtered counts.
std::vector<Platform> detect_platforms(const std::vector<ClusterSnapshot>& snapshots,
                                       int min_length = 2);

// Cluster counts ranked by total platform length, longest first; ties go
// to the count whose platform starts earlier. Count 1 (the terminal
// all-in-one state) is never suggested.
std::vector<Suggestion> suggest_counts(const std::vector<Platform>& platforms);

// Integers strictly between the first and last cluster count that never
// occur in the sequence, ascending.
std::vector<int> skipped_counts(const std::vector<int>& counts);
std::vector<int> skipped_counts(const EvolutionTrace& trace);

}  // namespace cce
