// Test-only oracles and generators. Everything here is deliberately written
// against the naive textbook formulation, independent of the library's
// normalized/renormalized code paths, so the two can be compared.
#pragma once

#include <random>
#include <vector>

#include "dense.hpp"
#include "similarity.hpp"

namespace testutil {

using Mat = std::vector<std::vector<double>>;

// ---- naive reference implementations (oracle path) ----

Mat naive_multiply(const Mat& a, const Mat& b);

// Plain repeated multiplication, no rescaling, no re-symmetrization.
Mat naive_power(const Mat& s, int k);

// Diagonally maximal indices of m, ascending.
std::vector<int> naive_centers(const Mat& m, double epsilon = 0.0);

// Relative-connectivity assignment; returns labels and appends unreachable
// points to centers as their own singletons.
std::vector<int> naive_labels(const Mat& m, std::vector<int>& centers);

// Long textbook power iteration (no residual logic): v <- S v / ||v||.
struct EigenOracle {
    std::vector<double> vector;
    double value = 0.0;
};
EigenOracle oracle_power_iteration(const Mat& s, int iterations = 20000);

// All eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
std::vector<double> jacobi_eigenvalues(Mat a, int sweeps = 50);

// ---- converters ----

cce::Matrix to_matrix(const Mat& m);
Mat to_rows(const cce::Matrix& m);

// ---- deterministic generators (portable across standard libraries) ----

// Uniform in [0, 1) built from raw mt19937 output.
double uniform01(std::mt19937& rng);
double uniform(std::mt19937& rng, double lo, double hi);
// Standard normal via Box-Muller on the portable uniforms.
double normal01(std::mt19937& rng);

// Random symmetric nonnegative matrix with unit diagonal bias removed:
// entries uniform in [0, 1), exactly symmetric.
cce::Matrix random_symmetric(std::mt19937& rng, int n);

// Gaussian-kernel similarity of n random points in [0, span)^dim.
cce::SimilarityMatrix random_kernel_matrix(std::mt19937& rng, int n, int dim, double span,
                                           double sigma);

}  // namespace testutil
