#include "helpers.hpp"

#include <algorithm>
#include <cmath>

namespace testutil {

Mat naive_multiply(const Mat& a, const Mat& b) {
    const int n = static_cast<int>(a.size());
    Mat c(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double sum = 0.0;
            for (int k = 0; k < n; ++k) sum += a[i][k] * b[k][j];
            c[i][j] = sum;
        }
    return c;
}

Mat naive_power(const Mat& s, int k) {
    Mat p = s;
    for (int i = 1; i < k; ++i) p = naive_multiply(p, s);
    return p;
}

std::vector<int> naive_centers(const Mat& m, double epsilon) {
    const int n = static_cast<int>(m.size());
    std::vector<int> centers;
    for (int i = 0; i < n; ++i) {
        bool ok = true;
        for (int j = 0; j < n; ++j) {
            if (m[i][i] < m[i][j] - epsilon) {
                ok = false;
                break;
            }
        }
        if (ok) centers.push_back(i);
    }
    return centers;
}

std::vector<int> naive_labels(const Mat& m, std::vector<int>& centers) {
    const int n = static_cast<int>(m.size());
    std::vector<int> labels(n, -1);
    std::vector<bool> is_center(n, false);
    for (int c : centers) {
        is_center[c] = true;
        labels[c] = c;
    }
    // Every decision is made against the original center set; unreachable
    // points only join the centers afterwards.
    std::vector<int> singletons;
    for (int j = 0; j < n; ++j) {
        if (is_center[j]) continue;
        int best = -1;
        double best_score = 0.0;
        for (int c : centers) {
            const double score = m[c][c] > 0.0 ? m[c][j] / m[c][c] : 0.0;
            if (score > best_score) {
                best_score = score;
                best = c;
            }
        }
        if (best < 0) {
            labels[j] = j;
            singletons.push_back(j);
        } else {
            labels[j] = best;
        }
    }
    centers.insert(centers.end(), singletons.begin(), singletons.end());
    std::sort(centers.begin(), centers.end());
    return labels;
}

EigenOracle oracle_power_iteration(const Mat& s, int iterations) {
    const int n = static_cast<int>(s.size());
    std::vector<double> v(n, 1.0);
    for (int it = 0; it < iterations; ++it) {
        std::vector<double> w(n, 0.0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) w[i] += s[i][j] * v[j];
        double norm = 0.0;
        for (double x : w) norm += x * x;
        norm = std::sqrt(norm);
        if (norm == 0.0) break;
        for (int i = 0; i < n; ++i) v[i] = w[i] / norm;
    }
    EigenOracle out;
    out.vector = v;
    double num = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) num += v[i] * s[i][j] * v[j];
    out.value = num;
    return out;
}

std::vector<double> jacobi_eigenvalues(Mat a, int sweeps) {
    const int n = static_cast<int>(a.size());
    for (int sweep = 0; sweep < sweeps; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
        if (off < 1e-30) break;

        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (a[p][q] == 0.0) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int i = 0; i < n; ++i) {
                    const double aip = a[i][p];
                    const double aiq = a[i][q];
                    a[i][p] = c * aip - s * aiq;
                    a[i][q] = s * aip + c * aiq;
                }
                for (int i = 0; i < n; ++i) {
                    const double api = a[p][i];
                    const double aqi = a[q][i];
                    a[p][i] = c * api - s * aqi;
                    a[q][i] = s * api + c * aqi;
                }
            }
        }
    }
    std::vector<double> eigs(n);
    for (int i = 0; i < n; ++i) eigs[i] = a[i][i];
    std::sort(eigs.begin(), eigs.end());
    return eigs;
}

cce::Matrix to_matrix(const Mat& m) {
    const int n = static_cast<int>(m.size());
    cce::Matrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = m[i][j];
    return out;
}

Mat to_rows(const cce::Matrix& m) {
    const int n = m.order();
    Mat out(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i][j] = m(i, j);
    return out;
}

double uniform01(std::mt19937& rng) {
    // 53 random bits, portable across standard library implementations.
    const std::uint64_t hi = rng() >> 5;   // 27 bits
    const std::uint64_t lo = rng() >> 6;   // 26 bits
    return (hi * 67108864.0 + lo) / 9007199254740992.0;
}

double uniform(std::mt19937& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

double normal01(std::mt19937& rng) {
    double u1 = uniform01(rng);
    while (u1 == 0.0) u1 = uniform01(rng);
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

cce::Matrix random_symmetric(std::mt19937& rng, int n) {
    cce::Matrix m(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            const double v = uniform01(rng);
            m(i, j) = v;
            m(j, i) = v;
        }
    }
    return m;
}

cce::SimilarityMatrix random_kernel_matrix(std::mt19937& rng, int n, int dim, double span,
                                           double sigma) {
    std::vector<double> coords(static_cast<std::size_t>(n) * dim);
    for (double& c : coords) c = uniform(rng, 0.0, span);
    const auto points = cce::PointSet::create(std::move(coords), dim);
    return cce::gaussian_kernel(points, sigma);
}

}  // namespace testutil
