#pragma once

#include <utility>
#include <vector>

#include "qwalk/transport.hpp"

namespace qwalk {

/// Semicircular spectral density centered at kbar with half-width 2*sigma.
struct SemicircleDensity {
    double kbar = 0.0;
    double sigma = 0.0;

    /// Sparse-network form: sigma^2 = kbar.
    static SemicircleDensity sparse(double kbar);
    /// Finite-size form: sigma^2 = N p (1-p), center p(N-1).
    static SemicircleDensity finite(int n, double p);

    double support_lo() const { return kbar - 2.0 * sigma; }
    double support_hi() const { return kbar + 2.0 * sigma; }
    double operator()(double e) const; // density, 0 outside support
    double cdf(double e) const;
};

/// Gauss-Chebyshev (second kind) rule for integrals against the semicircle
/// weight: sum_i weight[i] * f(node[i]) with weights summing to 1.
struct ChebyshevRule {
    ChebyshevRule(const SemicircleDensity& density, int node_count);
    std::vector<double> nodes;
    std::vector<double> weights;

    template <typename F>
    double integrate(F&& f) const {
        double sum = 0.0;
        for (size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
        return sum;
    }
};

/// Node count rule: max(2048, ceil(8 * sigma * t_max)) resolves the
/// oscillation of e^{-itE} across the support.
int quadrature_node_count(const SemicircleDensity& density, double t_max);

/// Continuum-limit classical return probability over the grid (sparse form).
TransitionSeries continuum_classical(double kbar, const TimeGrid& grid);

/// Continuum-limit squared averaged amplitude |alpha(t)|^2 (sparse form).
TransitionSeries continuum_amplitude(double kbar, const TimeGrid& grid);

/// Strict interior local maxima as (t, value) pairs. When min_period > 0 the
/// grid must sample at least 10 points per min_period or a ParamError names
/// the required step.
std::vector<std::pair<double, double>> extract_local_maxima(const TransitionSeries& series,
                                                            double min_period = 0.0);

struct PowerLawFit {
    double exponent = 0.0;
    double prefactor = 0.0;
    double window_lo = 0.0, window_hi = 0.0;
    double residual_rms = 0.0; // in log-log space
    int points = 0;
};

struct ExponentialFit {
    double rate = 0.0; // decay rate: value ~ prefactor * e^{-rate * t}
    double prefactor = 0.0;
    double window_lo = 0.0, window_hi = 0.0;
    double residual_rms = 0.0; // in (t, log value) space
    int points = 0;
};

/// Least squares on (log t, log value) inside [lo, hi]; needs >= 5 positive
/// points in the window.
PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& points, double lo, double hi);

/// Least squares on (t, log value) inside [lo, hi].
ExponentialFit fit_exponential(const std::vector<std::pair<double, double>>& points, double lo,
                               double hi);

/// Envelope value at t by log-log interpolation of the maxima list.
double envelope_at(const std::vector<std::pair<double, double>>& maxima, double t);

enum class TransportVerdict { QuantumMoreEfficient, ClassicalMoreEfficient };

/// Side-by-side decay analysis of the classical return probability and the
/// squared amplitude bound for one average degree.
struct EfficiencyReport {
    double kbar = 0.0;
    TransitionSeries classical;                     // log-grid series
    TransitionSeries amplitude;                     // log-grid series
    std::vector<std::pair<double, double>> maxima;  // from a dense internal grid
    PowerLawFit classical_fit;
    PowerLawFit maxima_fit;
    ExponentialFit classical_exp_fit;               // over the upper half window
    bool classical_is_exponential = false;
    TransportVerdict verdict = TransportVerdict::QuantumMoreEfficient;
};

EfficiencyReport compare_efficiency(double kbar, double window_lo = 10.0, double window_hi = 100.0);

/// Kolmogorov-Smirnov distance between a sorted sample and the density CDF.
double ks_distance(const std::vector<double>& sorted_sample, const SemicircleDensity& density);

} // namespace qwalk
