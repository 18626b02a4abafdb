#pragma once

#include <vector>

#include "evolution.hpp"
#include "similarity.hpp"

namespace cce {

// Dominant eigenpair estimate from power iteration.
struct EigenEstimate {
    std::vector<double> vector;  // unit Euclidean norm, dominant component >= 0
    double eigenvalue = 0.0;     // Rayleigh quotient
    int iterations = 0;
    double residual = 0.0;       // ||S u - lambda u|| for the unit vector u
    bool converged = false;
};

// Power iteration started from the normalized all-ones vector, which is
// never orthogonal to the dominant eigenvector of a nonnegative
// irreducible matrix. Stops when the residual drops to tol; hitting
// max_iter leaves converged = false (flagged, not an error). A zero
// matrix is an error.
EigenEstimate principal_eigenvector(const SimilarityMatrix& s, double tol = 1e-12,
                                    int max_iter = 10000);

// Element-wise square root of the diagonal of the current power,
// normalized to unit Euclidean norm. The uniform rescaling of the power
// state cancels here. An all-zero diagonal is an error.
std::vector<double> diag_sqrt_direction(const PowerState& state);

// Finite-k check of the identity u_j / u_i = sqrt(s_jj^(k) / s_ii^(k))
// linking the power diagonal to the dominant eigenvector.
struct TheoremReport {
    int k = 0;
    // max over pairs (i, j) with u_i > 0 of |u_j/u_i - sqrt(s_jj/s_ii)|
    double max_deviation = 0.0;
    double gap_ratio = 0.0;  // |lambda_2| / lambda_1 estimate
    bool connected = false;
    bool dominant_simple = false;
    bool converged = false;  // connected and dominant eigenvalue simple
    EigenEstimate eigen;
};

// Compares diag_sqrt_direction(S^k) against the power-iteration
// eigenvector. For connected matrices with a simple dominant eigenvalue
// the deviation shrinks toward 0 as k grows. A disconnected graph or a
// degenerate dominant eigenvalue is reported as non-convergent, not an
// error.
TheoremReport verify_theorem(const SimilarityMatrix& s, int k);

// True when the graph with an edge for every positive off-diagonal entry
// is connected (order 1 counts as connected).
bool is_connected(const SimilarityMatrix& s);

}  // namespace cce
