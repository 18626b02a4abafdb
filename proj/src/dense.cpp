#include "dense.hpp"

#include <algorithm>
#include <cassert>

namespace cce {

Matrix Matrix::identity(int order) {
    Matrix m(order);
    for (int i = 0; i < order; ++i) m(i, i) = 1.0;
    return m;
}

double Matrix::max_entry() const {
    double mx = 0.0;
    for (double v : a_) mx = std::max(mx, v);
    return mx;
}

void Matrix::scale(double c) {
    for (double& v : a_) v *= c;
}

void Matrix::symmetrize() {
    for (int i = 0; i < n_; ++i) {
        for (int j = i + 1; j < n_; ++j) {
            const double avg = ((*this)(i, j) + (*this)(j, i)) / 2.0;
            (*this)(i, j) = avg;
            (*this)(j, i) = avg;
        }
    }
}

void multiply_symmetric(const Matrix& a, const Matrix& b, Matrix& c) {
    const int n = a.order();
    assert(b.order() == n);
    if (c.order() != n) c = Matrix(n);

#pragma omp parallel for schedule(dynamic, 8)
    for (int i = 0; i < n; ++i) {
        const double* ai = a.row(i);
        for (int j = i; j < n; ++j) {
            const double* bj = b.row(j);
            double sum = 0.0;
            for (int k = 0; k < n; ++k) sum += ai[k] * bj[k];
            c(i, j) = sum;
            c(j, i) = sum;
        }
    }
}

void multiply_vector(const Matrix& m, const std::vector<double>& x, std::vector<double>& y) {
    const int n = m.order();
    assert(static_cast<int>(x.size()) == n);
    y.assign(n, 0.0);
    for (int i = 0; i < n; ++i) {
        const double* row = m.row(i);
        double sum = 0.0;
        for (int j = 0; j < n; ++j) sum += row[j] * x[j];
        y[i] = sum;
    }
}

}  // namespace cce
