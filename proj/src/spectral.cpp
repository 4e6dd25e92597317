#include "qwalk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "qwalk/errors.hpp"

namespace qwalk {

Matrix laplacian(const Graph& g) {
    validate_graph(g);
    Matrix a(g.n);
    for (const auto& [u, v] : g.edges) {
        a(u, v) = -1.0;
        a(v, u) = -1.0;
        a(u, u) += 1.0;
        a(v, v) += 1.0;
    }
    return a;
}

namespace {

double frobenius_norm(const Matrix& a) {
    double sum = 0.0;
    for (size_t i = 0; i < a.size(); ++i) sum += a.data()[i] * a.data()[i];
    return std::sqrt(sum);
}

// Cyclic Jacobi. Diagonalizes `a` in place; when `u` is non-null its rows
// accumulate the eigenvectors (row m of u converges to eigenvector m, in
// the unsorted order of the diagonal of a).
void jacobi_core(Matrix& a, Matrix* u, const EigenOptions& options) {
    const int n = a.n();
    if (n <= 1) return;

    const double target = options.convergence_tol * std::max(frobenius_norm(a), 1e-300);

    for (int sweep = 1; sweep <= options.max_sweeps; ++sweep) {
        double off_sq = 0.0;
        double abs_sum = 0.0;
        for (int i = 0; i < n; ++i) {
            const double* ri = a.row(i);
            for (int j = i + 1; j < n; ++j) {
                off_sq += ri[j] * ri[j];
                abs_sum += std::fabs(ri[j]);
            }
        }
        if (std::sqrt(2.0 * off_sq) <= target) return;

        // loose rotation threshold for the first sweeps
        const double tresh = sweep < 4 ? 0.2 * abs_sum / (static_cast<double>(n) * n) : 0.0;

        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double* rp = a.row(p);
                double* rq = a.row(q);
                const double apq = rp[q];
                const double small = 100.0 * std::fabs(apq);

                // skip elements that can no longer affect the diagonal
                if (sweep > 4 && std::fabs(rp[p]) + small == std::fabs(rp[p]) &&
                    std::fabs(rq[q]) + small == std::fabs(rq[q])) {
                    rp[q] = 0.0;
                    rq[p] = 0.0;
                    continue;
                }
                if (std::fabs(apq) <= tresh || apq == 0.0) continue;

                const double diff = rq[q] - rp[p];
                double t;
                if (std::fabs(diff) + small == std::fabs(diff)) {
                    t = apq / diff;
                } else {
                    const double theta = 0.5 * diff / apq;
                    t = 1.0 / (std::fabs(theta) + std::sqrt(1.0 + theta * theta));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                const double app = rp[p] - t * apq;
                const double aqq = rq[q] + t * apq;

                for (int j = 0; j < n; ++j) {
                    const double vp = rp[j];
                    const double vq = rq[j];
                    rp[j] = vp - s * (vq + tau * vp);
                    rq[j] = vq + s * (vp - tau * vq);
                }
                rp[p] = app;
                rq[q] = aqq;
                rp[q] = 0.0;
                rq[p] = 0.0;
                for (int j = 0; j < n; ++j) {
                    if (j == p || j == q) continue;
                    a(j, p) = rp[j];
                    a(j, q) = rq[j];
                }

                if (u) {
                    double* up = u->row(p);
                    double* uq = u->row(q);
                    for (int j = 0; j < n; ++j) {
                        const double vp = up[j];
                        const double vq = uq[j];
                        up[j] = vp - s * (vq + tau * vp);
                        uq[j] = vq + s * (vp - tau * vq);
                    }
                }
            }
        }
    }

    double off_sq = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) off_sq += a(i, j) * a(i, j);
    const double achieved = std::sqrt(2.0 * off_sq);
    if (achieved > target)
        throw NumericalError("jacobi eigensolver did not converge in " +
                                 std::to_string(options.max_sweeps) +
                                 " sweeps (off-diagonal norm " + std::to_string(achieved) + ")",
                             achieved);
}

std::vector<int> ascending_order(const std::vector<double>& values) {
    std::vector<int> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (values[a] != values[b]) return values[a] < values[b];
        return a < b;
    });
    return order;
}

void fix_sign(double* row, int n) {
    for (int j = 0; j < n; ++j) {
        if (std::fabs(row[j]) > 1e-12) {
            if (row[j] < 0.0)
                for (int i = 0; i < n; ++i) row[i] = -row[i];
            return;
        }
    }
}

} // namespace

Spectrum eigendecompose(const Matrix& a, const EigenOptions& options) {
    const int n = a.n();
    if (n == 0) throw ParamError("cannot decompose an empty matrix");

    Matrix work = a;
    Matrix u = Matrix::identity(n);
    jacobi_core(work, &u, options);

    std::vector<double> raw(n);
    for (int i = 0; i < n; ++i) raw[i] = work(i, i);
    const auto order = ascending_order(raw);

    Spectrum s;
    s.eigenvalues.resize(n);
    s.vectors = Matrix(n);
    for (int m = 0; m < n; ++m) {
        s.eigenvalues[m] = raw[order[m]];
        const double* src = u.row(order[m]);
        double* dst = s.vectors.row(m);
        std::copy(src, src + n, dst);
        fix_sign(dst, n);
    }
    s.degeneracy_tol =
        options.degeneracy_tol >= 0.0 ? options.degeneracy_tol : default_degeneracy_tol(s.eigenvalues);
    s.degeneracy_classes = cluster_degeneracies(s.eigenvalues, s.degeneracy_tol);
    return s;
}

namespace {

// Householder reduction of a symmetric matrix to tridiagonal form; writes the
// diagonal into d and the subdiagonal into e[1..n-1]. Destroys `a`.
void tridiagonalize(Matrix& a, std::vector<double>& d, std::vector<double>& e) {
    const int n = a.n();
    d.assign(n, 0.0);
    e.assign(n, 0.0);
    for (int i = n - 1; i >= 1; --i) {
        const int l = i - 1;
        double h = 0.0;
        if (l > 0) {
            double scale = 0.0;
            for (int k = 0; k <= l; ++k) scale += std::fabs(a(i, k));
            if (scale == 0.0) {
                e[i] = a(i, l);
            } else {
                for (int k = 0; k <= l; ++k) {
                    a(i, k) /= scale;
                    h += a(i, k) * a(i, k);
                }
                double f = a(i, l);
                double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                a(i, l) = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    g = 0.0;
                    for (int k = 0; k <= j; ++k) g += a(j, k) * a(i, k);
                    for (int k = j + 1; k <= l; ++k) g += a(k, j) * a(i, k);
                    e[j] = g / h;
                    f += e[j] * a(i, j);
                }
                const double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = a(i, j);
                    e[j] = g = e[j] - hh * f;
                    for (int k = 0; k <= j; ++k) a(j, k) -= f * e[k] + g * a(i, k);
                }
            }
        } else {
            e[i] = a(i, l);
        }
        d[i] = h;
    }
    for (int i = 0; i < n; ++i) d[i] = a(i, i);
}

// Implicit-shift QL on a tridiagonal matrix; d becomes the eigenvalues.
void ql_implicit(std::vector<double>& d, std::vector<double>& e) {
    const int n = static_cast<int>(d.size());
    if (n <= 1) return;
    for (int i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;

    for (int l = 0; l < n; ++l) {
        int iterations = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
            }
            if (m != l) {
                if (iterations++ == 50)
                    throw NumericalError("tridiagonal QL failed to converge", std::fabs(e[l]));
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

} // namespace

std::vector<double> eigenvalues_only(const Matrix& a) {
    const int n = a.n();
    if (n == 0) throw ParamError("cannot decompose an empty matrix");
    Matrix work = a;
    std::vector<double> d, e;
    tridiagonalize(work, d, e);
    ql_implicit(d, e);
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<std::vector<int>> cluster_degeneracies(const std::vector<double>& ascending, double tol) {
    std::vector<std::vector<int>> classes;
    for (int i = 0; i < static_cast<int>(ascending.size()); ++i) {
        if (i == 0 || !(ascending[i] - ascending[i - 1] < tol)) classes.emplace_back();
        classes.back().push_back(i);
    }
    return classes;
}

double default_degeneracy_tol(const std::vector<double>& ascending) {
    const double top = ascending.empty() ? 0.0 : std::fabs(ascending.back());
    return 1e-8 * std::max(1.0, top);
}

} // namespace qwalk
