#pragma once

#include <vector>

#include "qwalk/matrix.hpp"
#include "qwalk/spectral.hpp"

namespace qwalk {

/// Strictly ascending, nonnegative time points.
struct TimeGrid {
    enum class Spacing { Linear, Logarithmic };

    Spacing spacing = Spacing::Linear;
    std::vector<double> points;

    size_t size() const { return points.size(); }
    double front() const { return points.front(); }
    double back() const { return points.back(); }

    static TimeGrid linear(double t0, double t1, int count);
    static TimeGrid logarithmic(double t0, double t1, int count);
    static TimeGrid default_linear(); // [0, 20], step 0.05
    static TimeGrid default_log();    // [1e-2, 1e3], 600 points

    void validate() const;
};

enum class SeriesKind { Classical, Quantum, AmplitudeBound };

/// Per-time transport values: either node-averaged scalars or full N x N
/// transition matrices, one entry per grid point.
struct TransitionSeries {
    TimeGrid grid;
    SeriesKind kind = SeriesKind::Classical;
    std::vector<double> values;   // scalar form
    std::vector<Matrix> matrices; // matrix form

    bool matrix_form() const { return !matrices.empty(); }
};

/// Classical transition matrices p_{k,j}(t): spectral sum of e^{-t E_n} over
/// eigenvector outer products. Column-stochastic at every t.
TransitionSeries classical_transition(const Spectrum& s, const TimeGrid& grid);

/// Quantum transition matrices pi_{k,j}(t) = |<k|e^{-itH}|j>|^2, from complex
/// amplitudes over the spectral sum.
TransitionSeries quantum_transition(const Spectrum& s, const TimeGrid& grid);

/// Node-averaged classical return probability, eigenvalues only.
TransitionSeries avg_return_classical(const Spectrum& s, const TimeGrid& grid);

/// Node-averaged quantum return probability from the N diagonal amplitudes.
TransitionSeries avg_return_quantum(const Spectrum& s, const TimeGrid& grid);

/// Eigenvalue-only lower bound |mean_n e^{-it E_n}|^2 on the averaged quantum
/// return probability.
TransitionSeries avg_amplitude_bound(const Spectrum& s, const TimeGrid& grid);

/// Long-time average of the quantum transition probability. Only eigenvalue
/// pairs inside one degeneracy class survive the average.
struct LongTimeMatrix {
    Matrix chi;
    double chi_bar = 0.0; // mean diagonal entry

    int n() const { return chi.n(); }
};

LongTimeMatrix long_time_average(const Spectrum& s);

/// Diagonal of the long-time average without forming the full matrix.
std::vector<double> long_time_diagonal(const Spectrum& s);
double long_time_chi_bar(const Spectrum& s);

/// Mean and standard deviation over the last quarter of a scalar series.
struct PlateauStats {
    double mean = 0.0;
    double stddev = 0.0;
    int points = 0;
};
PlateauStats plateau_stats(const TransitionSeries& series);

} // namespace qwalk
