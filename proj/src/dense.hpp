#pragma once

#include <cstddef>
#include <vector>

namespace cce {

// Dense square matrix of doubles, row-major storage.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int order, double fill = 0.0)
        : n_(order), a_(static_cast<std::size_t>(order) * order, fill) {}

    static Matrix identity(int order);

    int order() const { return n_; }

    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    const double* row(int i) const { return a_.data() + static_cast<std::size_t>(i) * n_; }
    double* data() { return a_.data(); }
    const double* data() const { return a_.data(); }
    const std::vector<double>& values() const { return a_; }

    double max_entry() const;
    void scale(double c);

    // Forces exact symmetry by averaging each off-diagonal pair.
    void symmetrize();

    bool operator==(const Matrix& other) const = default;

private:
    int n_ = 0;
    std::vector<double> a_;
};

// c = a * b for exactly symmetric a and b that commute (powers of one matrix).
// Each entry of the upper triangle is a single row-by-row dot product; the
// lower triangle is mirrored, so the result is exactly symmetric.
void multiply_symmetric(const Matrix& a, const Matrix& b, Matrix& c);

// y = m * x
void multiply_vector(const Matrix& m, const std::vector<double>& x, std::vector<double>& y);

}  // namespace cce
