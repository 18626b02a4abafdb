#include "spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "errors.hpp"

namespace cce {

namespace {

double norm2(const std::vector<double>& v) {
    double sum = 0.0;
    for (double x : v) sum += x * x;
    return std::sqrt(sum);
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
    return sum;
}

// Magnitude of the second eigenvalue via power iteration on the
// complement of the dominant direction. Diagnostic accuracy is enough
// here; the estimate only feeds the degeneracy flag.
double second_eigenvalue_magnitude(const Matrix& m, const std::vector<double>& u1) {
    const int n = m.order();
    if (n < 2) return 0.0;

    std::vector<double> w(n);
    for (int i = 0; i < n; ++i) {
        w[i] = ((i % 2 == 0) ? 1.0 : -1.0) + 1e-3 * (i + 1);
    }
    std::vector<double> tmp;
    double rayleigh = 0.0;
    for (int iter = 0; iter < 300; ++iter) {
        const double along = dot(w, u1);
        for (int i = 0; i < n; ++i) w[i] -= along * u1[i];
        const double nw = norm2(w);
        if (nw == 0.0) return 0.0;
        for (double& x : w) x /= nw;

        multiply_vector(m, w, tmp);
        const double next = dot(w, tmp);
        const bool settled = std::abs(next - rayleigh) <= 1e-13 * std::max(1.0, std::abs(next));
        rayleigh = next;
        std::swap(w, tmp);
        if (settled && iter > 2) break;
    }
    return std::abs(rayleigh);
}

// Continues the power iteration past the stopping tolerance until the
// residual stagnates, keeping the best iterate. The theorem deviation is
// limited by the eigenvector accuracy, so the extra polish keeps the
// reported numbers close to the true finite-k deviation.
EigenEstimate refine_to_stagnation(const Matrix& m, EigenEstimate est, int budget) {
    const int n = m.order();
    std::vector<double> v = est.vector;
    std::vector<double> w;
    int stale = 0;
    for (int iter = 0; iter < budget && stale < 25; ++iter) {
        multiply_vector(m, v, w);
        const double nw = norm2(w);
        if (nw == 0.0) break;
        for (int i = 0; i < n; ++i) v[i] = w[i] / nw;

        multiply_vector(m, v, w);
        const double lambda = dot(v, w);
        double resid_sq = 0.0;
        for (int i = 0; i < n; ++i) {
            const double r = w[i] - lambda * v[i];
            resid_sq += r * r;
        }
        const double residual = std::sqrt(resid_sq);
        if (residual < est.residual) {
            est.vector = v;
            est.eigenvalue = lambda;
            est.residual = residual;
            stale = 0;
        } else {
            ++stale;
        }
    }
    return est;
}

}  // namespace

EigenEstimate principal_eigenvector(const SimilarityMatrix& s, double tol, int max_iter) {
    if (!(tol > 0.0)) throw ParamError("tol must be positive");
    if (max_iter < 1) throw ParamError("max_iter must be >= 1");
    const Matrix& m = s.entries();
    const int n = m.order();
    if (m.max_entry() == 0.0) throw ValidationError("zero matrix has no dominant eigenvector");

    EigenEstimate est;
    est.vector.assign(n, 1.0 / std::sqrt(static_cast<double>(n)));

    std::vector<double> w;
    for (int iter = 0; iter <= max_iter; ++iter) {
        multiply_vector(m, est.vector, w);
        est.eigenvalue = dot(est.vector, w);  // Rayleigh quotient of the unit iterate
        double resid_sq = 0.0;
        for (int i = 0; i < n; ++i) {
            const double r = w[i] - est.eigenvalue * est.vector[i];
            resid_sq += r * r;
        }
        est.residual = std::sqrt(resid_sq);
        est.iterations = iter;
        if (est.residual <= tol) {
            est.converged = true;
            break;
        }
        if (iter == max_iter) break;  // flagged by converged = false

        const double nw = norm2(w);
        if (nw == 0.0) throw ValidationError("power iteration hit the zero vector");
        for (int i = 0; i < n; ++i) est.vector[i] = w[i] / nw;
    }

    int dominant = 0;
    for (int i = 1; i < n; ++i) {
        if (std::abs(est.vector[i]) > std::abs(est.vector[dominant])) dominant = i;
    }
    if (est.vector[dominant] < 0.0) {
        for (double& x : est.vector) x = -x;
    }
    return est;
}

std::vector<double> diag_sqrt_direction(const PowerState& state) {
    const Matrix& m = state.matrix();
    const int n = m.order();
    std::vector<double> d(n);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        d[i] = std::sqrt(m(i, i));
        sum += d[i] * d[i];
    }
    if (sum == 0.0) throw ValidationError("all-zero diagonal has no direction");
    const double inv = 1.0 / std::sqrt(sum);
    for (double& x : d) x *= inv;
    return d;
}

bool is_connected(const SimilarityMatrix& s) {
    const int n = s.order();
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        const int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < n; ++j) {
            if (!seen[j] && j != i && s.at(i, j) > 0.0) {
                seen[j] = true;
                ++reached;
                stack.push_back(j);
            }
        }
    }
    return reached == n;
}

TheoremReport verify_theorem(const SimilarityMatrix& s, int k) {
    if (k < 1) throw ParamError("k must be >= 1");

    TheoremReport report;
    report.k = k;
    report.eigen = refine_to_stagnation(s.entries(), principal_eigenvector(s), 2000);
    report.connected = is_connected(s);

    const double lambda2 = second_eigenvalue_magnitude(s.entries(), report.eigen.vector);
    report.gap_ratio = report.eigen.eigenvalue > 0.0 ? lambda2 / report.eigen.eigenvalue : 1.0;
    report.dominant_simple = report.gap_ratio < 1.0 - 1e-9;
    report.converged = report.connected && report.dominant_simple && report.eigen.converged;

    PowerState state(s);
    while (state.k() < k) state.advance();
    const Matrix& p = state.matrix();

    const auto& u = report.eigen.vector;
    const int n = p.order();
    double max_dev = 0.0;
    for (int i = 0; i < n; ++i) {
        if (!(u[i] > 0.0)) continue;
        const double diag_i = p(i, i);
        for (int j = 0; j < n; ++j) {
            double ratio;
            if (diag_i > 0.0) {
                ratio = std::sqrt(p(j, j) / diag_i);
            } else {
                ratio = std::numeric_limits<double>::infinity();
            }
            max_dev = std::max(max_dev, std::abs(u[j] / u[i] - ratio));
        }
    }
    report.max_deviation = max_dev;
    return report;
}

}  // namespace cce
