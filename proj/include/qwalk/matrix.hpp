#pragma once

#include <cstddef>
#include <vector>

namespace qwalk {

/// Dense row-major square matrix of doubles.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int n, double fill = 0.0) : n_(n), a_(static_cast<size_t>(n) * n, fill) {}

    int n() const { return n_; }
    bool empty() const { return n_ == 0; }

    double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    double* row(int i) { return a_.data() + static_cast<size_t>(i) * n_; }
    const double* row(int i) const { return a_.data() + static_cast<size_t>(i) * n_; }

    double* data() { return a_.data(); }
    const double* data() const { return a_.data(); }
    size_t size() const { return a_.size(); }

    static Matrix identity(int n) {
        Matrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    int n_ = 0;
    std::vector<double> a_;
};

double max_abs_diff(const Matrix& a, const Matrix& b);

/// Max row sum of absolute values.
double inf_norm(const Matrix& a);

} // namespace qwalk
