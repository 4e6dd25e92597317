#pragma once

// Scaling-and-squaring Taylor matrix exponential, real and complex. Test
// oracle only: independent of the spectral code paths it cross-checks.

#include <cmath>
#include <complex>
#include <vector>

#include "qwalk/matrix.hpp"

namespace oracle {

template <typename T>
struct Square {
    int n = 0;
    std::vector<T> a;

    explicit Square(int dim) : n(dim), a(static_cast<size_t>(dim) * dim, T{}) {}
    T& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    const T& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

    static Square identity(int dim) {
        Square m(dim);
        for (int i = 0; i < dim; ++i) m.at(i, i) = T{1};
        return m;
    }
};

template <typename T>
Square<T> multiply(const Square<T>& x, const Square<T>& y) {
    Square<T> out(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int k = 0; k < x.n; ++k) {
            const T f = x.at(i, k);
            for (int j = 0; j < x.n; ++j) out.at(i, j) += f * y.at(k, j);
        }
    return out;
}

template <typename T>
double max_abs(const Square<T>& m) {
    double worst = 0.0;
    for (const T& v : m.a) worst = std::max(worst, std::abs(v));
    return worst;
}

/// exp(B) by Taylor series after scaling B so its max entry norm is <= 0.5,
/// then repeated squaring.
template <typename T>
Square<T> matrix_exp(Square<T> b) {
    int squarings = 0;
    double scale = max_abs(b) * b.n;
    while (scale > 0.5) {
        scale *= 0.5;
        ++squarings;
    }
    const T half{0.5};
    for (int s = 0; s < squarings; ++s)
        for (auto& v : b.a) v *= half;

    Square<T> result = Square<T>::identity(b.n);
    Square<T> term = Square<T>::identity(b.n);
    for (int k = 1; k <= 40; ++k) {
        term = multiply(term, b);
        const T inv{1.0 / k};
        for (auto& v : term.a) v *= inv;
        for (size_t i = 0; i < result.a.size(); ++i) result.a[i] += term.a[i];
        if (max_abs(term) < 1e-20) break;
    }
    for (int s = 0; s < squarings; ++s) result = multiply(result, result);
    return result;
}

/// exp(-t A) for a real symmetric qwalk::Matrix.
inline Square<double> exp_minus_t(const qwalk::Matrix& a, double t) {
    Square<double> b(a.n());
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) b.at(i, j) = -t * a(i, j);
    return matrix_exp(std::move(b));
}

/// exp(-i t A); entries are complex amplitudes.
inline Square<std::complex<double>> exp_minus_it(const qwalk::Matrix& a, double t) {
    Square<std::complex<double>> b(a.n());
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) b.at(i, j) = std::complex<double>(0.0, -t * a(i, j));
    return matrix_exp(std::move(b));
}

} // namespace oracle
