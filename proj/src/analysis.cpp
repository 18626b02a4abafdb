#include "analysis.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "errors.hpp"

namespace cce {

std::vector<Platform> detect_platforms(const std::vector<ClusterSnapshot>& snapshots,
                                       int min_length) {
    if (min_length < 1) throw ParamError("min_length must be >= 1");
    std::vector<Platform> platforms;
    const int m = static_cast<int>(snapshots.size());
    int run_begin = 0;
    while (run_begin < m) {
        int run_end = run_begin;
        while (run_end + 1 < m &&
               snapshots[run_end + 1].cluster_count == snapshots[run_begin].cluster_count) {
            ++run_end;
        }
        const int length = run_end - run_begin + 1;
        if (length >= min_length) {
            Platform p;
            p.k_start = snapshots[run_begin].k;
            p.k_end = snapshots[run_end].k;
            p.cluster_count = snapshots[run_begin].cluster_count;
            p.partition_stable = true;
            for (int i = run_begin + 1; i <= run_end; ++i) {
                if (snapshots[i].labels != snapshots[run_begin].labels) {
                    p.partition_stable = false;
                    break;
                }
            }
            platforms.push_back(p);
        }
        run_begin = run_end + 1;
    }
    return platforms;
}

std::vector<Suggestion> suggest_counts(const std::vector<Platform>& platforms) {
    struct Tally {
        int total_length = 0;
        int first_k = 0;
    };
    std::map<int, Tally> by_count;
    for (const auto& p : platforms) {
        if (p.cluster_count == 1) continue;
        auto [it, inserted] = by_count.try_emplace(p.cluster_count, Tally{p.length(), p.k_start});
        if (!inserted) {
            it->second.total_length += p.length();
            it->second.first_k = std::min(it->second.first_k, p.k_start);
        }
    }

    std::vector<std::pair<int, Tally>> ranked(by_count.begin(), by_count.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second.total_length != b.second.total_length)
            return a.second.total_length > b.second.total_length;
        return a.second.first_k < b.second.first_k;
    });

    std::vector<Suggestion> out;
    out.reserve(ranked.size());
    for (const auto& [count, tally] : ranked) out.push_back({count, tally.total_length});
    return out;
}

std::vector<int> skipped_counts(const std::vector<int>& counts) {
    if (counts.empty()) throw ParamError("skipped_counts needs a nonempty count sequence");
    const int lo = std::min(counts.front(), counts.back());
    const int hi = std::max(counts.front(), counts.back());
    std::unordered_set<int> present(counts.begin(), counts.end());
    std::vector<int> skipped;
    for (int c = lo + 1; c < hi; ++c) {
        if (!present.contains(c)) skipped.push_back(c);
    }
    return skipped;
}

std::vector<int> skipped_counts(const EvolutionTrace& trace) {
    return skipped_counts(trace.counts());
}

}  // namespace cce
