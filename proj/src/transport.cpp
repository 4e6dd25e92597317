#include "qwalk/transport.hpp"

#include <cmath>
#include <string>

#include "qwalk/errors.hpp"

namespace qwalk {

TimeGrid TimeGrid::linear(double t0, double t1, int count) {
    if (count < 1) throw ParamError("time grid needs at least one point");
    if (t0 < 0.0 || t1 < t0) throw ParamError("time grid requires 0 <= t0 <= t1");
    if (count > 1 && t1 == t0) throw ParamError("degenerate linear grid");
    TimeGrid grid;
    grid.spacing = Spacing::Linear;
    grid.points.resize(count);
    for (int i = 0; i < count; ++i)
        grid.points[i] = count == 1 ? t0 : t0 + (t1 - t0) * i / (count - 1);
    return grid;
}

TimeGrid TimeGrid::logarithmic(double t0, double t1, int count) {
    if (count < 1) throw ParamError("time grid needs at least one point");
    if (t0 <= 0.0 || t1 < t0) throw ParamError("log grid requires 0 < t0 <= t1");
    if (count > 1 && t1 == t0) throw ParamError("degenerate log grid");
    TimeGrid grid;
    grid.spacing = Spacing::Logarithmic;
    grid.points.resize(count);
    const double l0 = std::log(t0), l1 = std::log(t1);
    for (int i = 0; i < count; ++i)
        grid.points[i] = count == 1 ? t0 : std::exp(l0 + (l1 - l0) * i / (count - 1));
    return grid;
}

TimeGrid TimeGrid::default_linear() { return linear(0.0, 20.0, 401); }
TimeGrid TimeGrid::default_log() { return logarithmic(1e-2, 1e3, 600); }

void TimeGrid::validate() const {
    if (points.empty()) throw ParamError("empty time grid");
    if (points.front() < 0.0) throw ParamError("negative time rejected");
    for (size_t i = 1; i < points.size(); ++i)
        if (!(points[i] > points[i - 1])) throw ParamError("time grid must be strictly ascending");
}

namespace {

void check_inputs(const Spectrum& s, const TimeGrid& grid) {
    if (s.n() == 0) throw ParamError("empty spectrum");
    if (s.vectors.n() != s.n() && s.vectors.n() != 0)
        throw ParamError("spectrum vectors do not match eigenvalue count");
    grid.validate();
}

} // namespace

TransitionSeries classical_transition(const Spectrum& s, const TimeGrid& grid) {
    check_inputs(s, grid);
    const int n = s.n();
    TransitionSeries out{grid, SeriesKind::Classical, {}, {}};
    out.matrices.reserve(grid.size());
    for (const double t : grid.points) {
        Matrix m(n);
        for (int e = 0; e < n; ++e) {
            const double w = std::exp(-t * s.eigenvalues[e]);
            const double* vec = s.vectors.row(e);
            for (int k = 0; k < n; ++k) {
                const double c = w * vec[k];
                double* row = m.row(k);
                for (int j = 0; j < n; ++j) row[j] += c * vec[j];
            }
        }
        out.matrices.push_back(std::move(m));
    }
    return out;
}

TransitionSeries quantum_transition(const Spectrum& s, const TimeGrid& grid) {
    check_inputs(s, grid);
    const int n = s.n();
    TransitionSeries out{grid, SeriesKind::Quantum, {}, {}};
    out.matrices.reserve(grid.size());
    Matrix re(n), im(n);
    for (const double t : grid.points) {
        re = Matrix(n);
        im = Matrix(n);
        for (int e = 0; e < n; ++e) {
            const double cr = std::cos(t * s.eigenvalues[e]);
            const double ci = -std::sin(t * s.eigenvalues[e]);
            const double* vec = s.vectors.row(e);
            for (int k = 0; k < n; ++k) {
                const double ar = cr * vec[k];
                const double ai = ci * vec[k];
                double* rr = re.row(k);
                double* ri = im.row(k);
                for (int j = 0; j < n; ++j) {
                    rr[j] += ar * vec[j];
                    ri[j] += ai * vec[j];
                }
            }
        }
        Matrix m(n);
        for (size_t i = 0; i < m.size(); ++i)
            m.data()[i] = re.data()[i] * re.data()[i] + im.data()[i] * im.data()[i];
        out.matrices.push_back(std::move(m));
    }
    return out;
}

TransitionSeries avg_return_classical(const Spectrum& s, const TimeGrid& grid) {
    if (s.n() == 0) throw ParamError("empty spectrum");
    grid.validate();
    const int n = s.n();
    TransitionSeries out{grid, SeriesKind::Classical, {}, {}};
    out.values.reserve(grid.size());
    for (const double t : grid.points) {
        double sum = 0.0;
        for (int e = 0; e < n; ++e) sum += std::exp(-t * s.eigenvalues[e]);
        out.values.push_back(sum / n);
    }
    return out;
}

TransitionSeries avg_return_quantum(const Spectrum& s, const TimeGrid& grid) {
    check_inputs(s, grid);
    const int n = s.n();

    // weights[e][j] = squared eigenvector component
    Matrix weights(n);
    for (int e = 0; e < n; ++e) {
        const double* vec = s.vectors.row(e);
        double* w = weights.row(e);
        for (int j = 0; j < n; ++j) w[j] = vec[j] * vec[j];
    }

    TransitionSeries out{grid, SeriesKind::Quantum, {}, {}};
    out.values.reserve(grid.size());
    std::vector<double> ar(n), ai(n);
    for (const double t : grid.points) {
        std::fill(ar.begin(), ar.end(), 0.0);
        std::fill(ai.begin(), ai.end(), 0.0);
        for (int e = 0; e < n; ++e) {
            const double cr = std::cos(t * s.eigenvalues[e]);
            const double ci = -std::sin(t * s.eigenvalues[e]);
            const double* w = weights.row(e);
            for (int j = 0; j < n; ++j) {
                ar[j] += cr * w[j];
                ai[j] += ci * w[j];
            }
        }
        double sum = 0.0;
        for (int j = 0; j < n; ++j) sum += ar[j] * ar[j] + ai[j] * ai[j];
        out.values.push_back(sum / n);
    }
    return out;
}

TransitionSeries avg_amplitude_bound(const Spectrum& s, const TimeGrid& grid) {
    if (s.n() == 0) throw ParamError("empty spectrum");
    grid.validate();
    const int n = s.n();
    TransitionSeries out{grid, SeriesKind::AmplitudeBound, {}, {}};
    out.values.reserve(grid.size());
    for (const double t : grid.points) {
        double sr = 0.0, si = 0.0;
        for (int e = 0; e < n; ++e) {
            sr += std::cos(t * s.eigenvalues[e]);
            si -= std::sin(t * s.eigenvalues[e]);
        }
        sr /= n;
        si /= n;
        out.values.push_back(sr * sr + si * si);
    }
    return out;
}

LongTimeMatrix long_time_average(const Spectrum& s) {
    if (s.n() == 0) throw ParamError("empty spectrum");
    if (s.degeneracy_classes.empty()) throw ParamError("spectrum lacks degeneracy classes");
    const int n = s.n();

    LongTimeMatrix result;
    result.chi = Matrix(n);
    Matrix block(n);
    for (const auto& cls : s.degeneracy_classes) {
        block = Matrix(n);
        for (const int e : cls) {
            const double* vec = s.vectors.row(e);
            for (int k = 0; k < n; ++k) {
                const double c = vec[k];
                double* row = block.row(k);
                for (int j = 0; j < n; ++j) row[j] += c * vec[j];
            }
        }
        for (size_t i = 0; i < block.size(); ++i)
            result.chi.data()[i] += block.data()[i] * block.data()[i];
    }

    double trace = 0.0;
    for (int j = 0; j < n; ++j) trace += result.chi(j, j);
    result.chi_bar = trace / n;
    return result;
}

std::vector<double> long_time_diagonal(const Spectrum& s) {
    if (s.n() == 0) throw ParamError("empty spectrum");
    if (s.degeneracy_classes.empty()) throw ParamError("spectrum lacks degeneracy classes");
    const int n = s.n();
    std::vector<double> diag(n, 0.0);
    std::vector<double> block(n);
    for (const auto& cls : s.degeneracy_classes) {
        std::fill(block.begin(), block.end(), 0.0);
        for (const int e : cls) {
            const double* vec = s.vectors.row(e);
            for (int j = 0; j < n; ++j) block[j] += vec[j] * vec[j];
        }
        for (int j = 0; j < n; ++j) diag[j] += block[j] * block[j];
    }
    return diag;
}

double long_time_chi_bar(const Spectrum& s) {
    const auto diag = long_time_diagonal(s);
    double sum = 0.0;
    for (const double d : diag) sum += d;
    return sum / static_cast<double>(diag.size());
}

PlateauStats plateau_stats(const TransitionSeries& series) {
    if (series.matrix_form() || series.values.empty())
        throw ParamError("plateau statistics need a scalar series");
    const int total = static_cast<int>(series.values.size());
    const int count = std::max(1, total / 4);
    const int start = total - count;

    double mean = 0.0;
    for (int i = start; i < total; ++i) mean += series.values[i];
    mean /= count;
    double var = 0.0;
    for (int i = start; i < total; ++i) {
        const double d = series.values[i] - mean;
        var += d * d;
    }
    return PlateauStats{mean, count > 1 ? std::sqrt(var / count) : 0.0, count};
}

} // namespace qwalk
