#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "errors.hpp"
#include "evolution.hpp"
#include "helpers.hpp"
#include "reference_case.hpp"

using namespace cce;
using testutil::Mat;

namespace {

// Checks an engine power state against an expected (unrescaled) power by
// aligning the uniform rescale on the expected matrix's own maximum.
void check_power_matches(const Matrix& engine, const std::array<std::array<double, 4>, 4>& expected,
                         double tol) {
    double mx = 0.0;
    for (const auto& row : expected)
        for (double v : row) mx = std::max(mx, v);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            CHECK(std::abs(engine(i, j) * mx - expected[i][j]) <= tol);
        }
}

}  // namespace

TEST_CASE("power steps reproduce the known powers of the four-point fixture") {
    PowerState state(testutil::four_point_similarity());
    CHECK(state.k() == 1);

    state.advance();
    CHECK(state.k() == 2);
    check_power_matches(state.matrix(), testutil::kFourPointSquared, 5e-4);

    state.advance();
    CHECK(state.k() == 3);
    check_power_matches(state.matrix(), testutil::kFourPointCubed, 5e-4);
}

TEST_CASE("identity is a fixed point of the power step") {
    PowerState state(SimilarityMatrix::from_matrix(Matrix::identity(4)));
    for (int step = 0; step < 5; ++step) {
        state.advance();
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) CHECK(state.matrix()(i, j) == (i == j ? 1.0 : 0.0));
    }
}

TEST_CASE("power state stays exactly symmetric with unit maximum") {
    std::mt19937 rng(411);
    const auto s =
        SimilarityMatrix::from_matrix(testutil::random_symmetric(rng, 9));
    PowerState state(s);
    for (int step = 0; step < 12; ++step) {
        state.advance();
        const auto& m = state.matrix();
        CHECK(m.max_entry() == 1.0);
        for (int i = 0; i < 9; ++i)
            for (int j = i + 1; j < 9; ++j) CHECK(m(i, j) == m(j, i));
    }
}

TEST_CASE("centers of the four-point fixture per power order") {
    PowerState state(testutil::four_point_similarity());
    CHECK(find_centers(state) == std::vector<int>{0, 1, 2, 3});

    state.advance();
    CHECK(find_centers(state) == std::vector<int>{1, 3});

    state.advance();
    CHECK(find_centers(state) == std::vector<int>{1});
}

TEST_CASE("assignment at the second power of the four-point fixture") {
    PowerState state(testutil::four_point_similarity());
    state.advance();
    const auto centers = find_centers(state);
    const auto snap = assign_points(state, centers);

    CHECK(snap.labels == std::vector<int>{1, 1, 1, 3});
    CHECK(snap.centers == std::vector<int>{1, 3});
    CHECK(snap.cluster_count == 2);

    // The relative connectivities that drive the decision for point 0.
    const auto& m = state.matrix();
    const double rcon_to_1 = m(1, 0) / m(1, 1);
    const double rcon_to_3 = m(3, 0) / m(3, 3);
    CHECK(rcon_to_1 == doctest::Approx(1.7197 / 2.1637).epsilon(5e-4));
    CHECK(rcon_to_3 == doctest::Approx(0.7686 / 1.3039).epsilon(5e-4));
    CHECK(rcon_to_1 > rcon_to_3);
}

TEST_CASE("a single center absorbs every point") {
    PowerState state(testutil::four_point_similarity());
    const auto snap = assign_points(state, {2});
    CHECK(snap.labels == std::vector<int>{2, 2, 2, 2});
    CHECK(snap.cluster_count == 1);
}

TEST_CASE("no assignment crosses blocks of a block-diagonal matrix") {
    Matrix m(4);
    m(0, 0) = 1.0;
    m(0, 1) = 0.9;
    m(1, 0) = 0.9;
    m(1, 1) = 0.8;
    m(2, 2) = 1.0;
    m(2, 3) = 0.7;
    m(3, 2) = 0.7;
    m(3, 3) = 0.6;
    PowerState state(SimilarityMatrix::from_matrix(m));
    const auto snap = assign_points(state, {0, 2});
    CHECK(snap.labels == std::vector<int>{0, 0, 2, 2});
}

TEST_CASE("a zero-diagonal center has a zero row and stays an isolated singleton") {
    Matrix m(3);
    m(0, 0) = 1.0;
    m(0, 1) = 0.5;
    m(1, 0) = 0.5;
    m(1, 1) = 0.4;  // dominated by the connection to point 0
    // point 2 has an all-zero row; 0 >= 0 keeps it diagonally maximal
    PowerState state(SimilarityMatrix::from_matrix(m));
    const auto centers = find_centers(state);
    CHECK(centers == std::vector<int>{0, 2});
    const auto snap = assign_points(state, centers);
    CHECK(snap.labels == std::vector<int>{0, 0, 2});
    CHECK(snap.cluster_count == 2);
}

TEST_CASE("a point unreachable from every center becomes its own singleton") {
    Matrix m(3);
    m(0, 0) = 1.0;
    m(0, 1) = 0.5;
    m(1, 0) = 0.5;
    m(1, 1) = 0.9;
    m(2, 2) = 0.8;  // disconnected from the first block
    PowerState state(SimilarityMatrix::from_matrix(m));
    const auto snap = assign_points(state, {0});
    CHECK(snap.labels == std::vector<int>{0, 0, 2});
    CHECK(snap.centers == std::vector<int>{0, 2});
    CHECK(snap.cluster_count == 2);
}

TEST_CASE("four-point evolution: counts 4, 2, 1 and stop on collapse") {
    const auto trace = run_evolution(testutil::four_point_similarity(), 10);
    CHECK(trace.counts() == std::vector<int>{4, 2, 1});
    CHECK(trace.stop_reason == StopReason::CollapsedToOne);
    CHECK(trace.snapshots[0].centers == std::vector<int>{0, 1, 2, 3});
    CHECK(trace.snapshots[1].centers == std::vector<int>{1, 3});
    CHECK(trace.snapshots[1].labels == std::vector<int>{1, 1, 1, 3});
    CHECK(trace.snapshots[2].centers == std::vector<int>{1});
    for (std::size_t i = 0; i < trace.snapshots.size(); ++i) {
        CHECK(trace.snapshots[i].k == static_cast<int>(i) + 1);
    }
}

TEST_CASE("identity evolution never collapses") {
    const auto trace = run_evolution(SimilarityMatrix::from_matrix(Matrix::identity(3)), 5);
    CHECK(trace.counts() == std::vector<int>{3, 3, 3, 3, 3});
    CHECK(trace.stop_reason == StopReason::ReachedKMax);
}

TEST_CASE("zero similarity matrix stops immediately with singletons") {
    const auto trace = run_evolution(SimilarityMatrix::from_matrix(Matrix(3)), 10);
    CHECK(trace.stop_reason == StopReason::ZeroMatrix);
    CHECK(trace.snapshots.size() == 1);
    CHECK(trace.counts() == std::vector<int>{3});
    CHECK(trace.snapshots[0].labels == std::vector<int>{0, 1, 2});
}

TEST_CASE("uniform scaling does not change the trace") {
    auto scaled_entries = testutil::matrix_from(testutil::kFourPoint);
    scaled_entries.scale(7.3);
    const auto trace = run_evolution(testutil::four_point_similarity(), 10);
    const auto scaled = run_evolution(SimilarityMatrix::from_matrix(scaled_entries), 10);
    CHECK(trace.snapshots == scaled.snapshots);
    CHECK(trace.stop_reason == scaled.stop_reason);
}

TEST_CASE("scale invariance holds on random matrices") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(testutil::uniform01(rng) * 11);
        const Matrix m = testutil::random_symmetric(rng, n);
        const double c = testutil::uniform(rng, 1e-3, 10.0);
        Matrix scaled = m;
        scaled.scale(c);

        const auto a = run_evolution(SimilarityMatrix::from_matrix(m), 24);
        const auto b = run_evolution(SimilarityMatrix::from_matrix(scaled), 24);
        CHECK(a.snapshots == b.snapshots);
    }
}

TEST_CASE("normalized engine agrees with the naive unnormalized power oracle") {
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(testutil::uniform01(rng) * 7);
        const Matrix m = testutil::random_symmetric(rng, n);
        const Mat rows = testutil::to_rows(m);

        const auto trace = run_evolution(SimilarityMatrix::from_matrix(m), 6);
        for (const auto& snap : trace.snapshots) {
            const Mat power = testutil::naive_power(rows, snap.k);
            auto centers = testutil::naive_centers(power);
            const auto labels = testutil::naive_labels(power, centers);
            CHECK(snap.centers == centers);
            CHECK(snap.labels == labels);
        }
    }
}

TEST_CASE("permuting the input permutes centers and labels identically") {
    std::mt19937 rng(8390);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 3 + static_cast<int>(testutil::uniform01(rng) * 7);
        const Matrix m = testutil::random_symmetric(rng, n);

        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        for (int i = n - 1; i > 0; --i) {
            std::swap(perm[i], perm[static_cast<int>(testutil::uniform01(rng) * (i + 1))]);
        }
        Matrix permuted(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) permuted(perm[i], perm[j]) = m(i, j);

        const auto base = run_evolution(SimilarityMatrix::from_matrix(m), 12);
        const auto moved = run_evolution(SimilarityMatrix::from_matrix(permuted), 12);
        REQUIRE(base.snapshots.size() == moved.snapshots.size());
        for (std::size_t s = 0; s < base.snapshots.size(); ++s) {
            const auto& b = base.snapshots[s];
            const auto& p = moved.snapshots[s];
            std::vector<int> mapped_centers;
            for (int c : b.centers) mapped_centers.push_back(perm[c]);
            std::sort(mapped_centers.begin(), mapped_centers.end());
            CHECK(mapped_centers == p.centers);
            for (int i = 0; i < n; ++i) CHECK(p.labels[perm[i]] == perm[b.labels[i]]);
        }
    }
}

TEST_CASE("block-diagonal similarity never assigns across blocks") {
    std::mt19937 rng(631);
    for (int trial = 0; trial < 10; ++trial) {
        const int n1 = 2 + static_cast<int>(testutil::uniform01(rng) * 8);
        const int n2 = 2 + static_cast<int>(testutil::uniform01(rng) * 8);
        const auto a = testutil::random_kernel_matrix(rng, n1, 2, 2.0, 1.0);
        const auto b = testutil::random_kernel_matrix(rng, n2, 2, 2.0, 1.0);
        Matrix m(n1 + n2);
        for (int i = 0; i < n1; ++i)
            for (int j = 0; j < n1; ++j) m(i, j) = a.at(i, j);
        for (int i = 0; i < n2; ++i)
            for (int j = 0; j < n2; ++j) m(n1 + i, n1 + j) = b.at(i, j);

        const auto trace = run_evolution(SimilarityMatrix::from_matrix(m), 40);
        for (const auto& snap : trace.snapshots) {
            for (int i = 0; i < n1; ++i) CHECK(snap.labels[i] < n1);
            for (int i = n1; i < n1 + n2; ++i) CHECK(snap.labels[i] >= n1);
        }
    }
}

TEST_CASE("every point is labeled and the count matches the distinct labels") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(testutil::uniform01(rng) * 10);
        const auto trace =
            run_evolution(SimilarityMatrix::from_matrix(testutil::random_symmetric(rng, n)), 16);
        for (const auto& snap : trace.snapshots) {
            std::vector<int> distinct = snap.labels;
            std::sort(distinct.begin(), distinct.end());
            distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
            CHECK(static_cast<int>(distinct.size()) == snap.cluster_count);
            CHECK(distinct == snap.centers);
            for (int c : snap.centers) CHECK(snap.labels[c] == c);
            for (int label : snap.labels) {
                CHECK(std::binary_search(snap.centers.begin(), snap.centers.end(), label));
            }
        }
    }
}

TEST_CASE("identical runs produce identical traces") {
    std::mt19937 rng(12);
    const auto s = SimilarityMatrix::from_matrix(testutil::random_symmetric(rng, 10));
    const auto a = run_evolution(s, 30);
    const auto b = run_evolution(s, 30);
    CHECK(a.snapshots == b.snapshots);
    CHECK(a.stop_reason == b.stop_reason);
}

TEST_CASE("even powers always keep the global diagonal argmax as a center") {
    std::mt19937 rng(9944);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 2 + static_cast<int>(testutil::uniform01(rng) * 10);
        PowerState state(SimilarityMatrix::from_matrix(testutil::random_symmetric(rng, n)));
        for (int step = 0; step < 8; ++step) {
            state.advance();
            if (state.k() % 2 != 0) continue;
            const auto& m = state.matrix();
            int argmax = 0;
            for (int i = 1; i < n; ++i)
                if (m(i, i) > m(argmax, argmax)) argmax = i;
            const auto centers = find_centers(state);
            CHECK(std::binary_search(centers.begin(), centers.end(), argmax));
        }
    }
}

TEST_CASE("filter_noise drops small clusters and reports their members") {
    ClusterSnapshot snap;
    snap.k = 2;
    snap.centers = {1, 3};
    snap.labels = {1, 1, 1, 3};
    snap.cluster_count = 2;

    const auto filtered = filter_noise(snap, 2);
    CHECK(filtered.snapshot.centers == std::vector<int>{1});
    CHECK(filtered.snapshot.cluster_count == 1);
    CHECK(filtered.snapshot.labels == std::vector<int>{1, 1, 1, kNoiseLabel});
    CHECK(filtered.noise == std::vector<int>{3});
}

TEST_CASE("filter_noise with threshold 0 changes nothing") {
    ClusterSnapshot snap;
    snap.k = 1;
    snap.centers = {0, 1, 2};
    snap.labels = {0, 1, 2};
    snap.cluster_count = 3;
    const auto filtered = filter_noise(snap, 0);
    CHECK(filtered.snapshot == snap);
    CHECK(filtered.noise.empty());
}

TEST_CASE("filter_noise can remove every cluster") {
    ClusterSnapshot snap;
    snap.k = 1;
    snap.centers = {0, 2};
    snap.labels = {0, 0, 2, 2};
    snap.cluster_count = 2;
    const auto filtered = filter_noise(snap, 2);
    CHECK(filtered.snapshot.cluster_count == 0);
    CHECK(filtered.snapshot.centers.empty());
    CHECK(filtered.noise == std::vector<int>{0, 1, 2, 3});
    CHECK(filtered.snapshot.labels ==
          std::vector<int>{kNoiseLabel, kNoiseLabel, kNoiseLabel, kNoiseLabel});
}

TEST_CASE("parameter validation") {
    const auto s = testutil::four_point_similarity();
    CHECK_THROWS_AS(run_evolution(s, 0), ParamError);
    CHECK_THROWS_AS(run_evolution(s, 5, -0.1), ParamError);
    CHECK_THROWS_AS(find_centers(s.entries(), -1.0), ParamError);
    ClusterSnapshot snap;
    CHECK_THROWS_AS(filter_noise(snap, -1), ParamError);
}
