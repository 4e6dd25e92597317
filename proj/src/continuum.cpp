#include "qwalk/continuum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qwalk/errors.hpp"

namespace qwalk {

SemicircleDensity SemicircleDensity::sparse(double kbar) {
    if (!(kbar > 0.0)) throw ParamError("average degree must be positive");
    return SemicircleDensity{kbar, std::sqrt(kbar)};
}

SemicircleDensity SemicircleDensity::finite(int n, double p) {
    if (n < 2) throw ParamError("semicircle density requires n >= 2");
    if (!(p > 0.0 && p < 1.0)) throw ParamError("semicircle density requires 0 < p < 1");
    return SemicircleDensity{p * (n - 1), std::sqrt(n * p * (1.0 - p))};
}

double SemicircleDensity::operator()(double e) const {
    const double x = e - kbar;
    const double r = 2.0 * sigma;
    if (std::fabs(x) >= r) return 0.0;
    return std::sqrt(r * r - x * x) / (2.0 * M_PI * sigma * sigma);
}

double SemicircleDensity::cdf(double e) const {
    const double r = 2.0 * sigma;
    const double x = std::clamp(e - kbar, -r, r);
    return 0.5 + (x * std::sqrt(r * r - x * x) + r * r * std::asin(x / r)) / (M_PI * r * r);
}

ChebyshevRule::ChebyshevRule(const SemicircleDensity& density, int node_count) {
    if (node_count < 1) throw ParamError("quadrature needs at least one node");
    nodes.resize(node_count);
    weights.resize(node_count);
    const double scale = 2.0 / (node_count + 1);
    for (int i = 1; i <= node_count; ++i) {
        const double theta = M_PI * i / (node_count + 1);
        const double s = std::sin(theta);
        nodes[i - 1] = density.kbar + 2.0 * density.sigma * std::cos(theta);
        weights[i - 1] = scale * s * s;
    }
}

int quadrature_node_count(const SemicircleDensity& density, double t_max) {
    const double resolving = 8.0 * density.sigma * t_max;
    return std::max(2048, static_cast<int>(std::ceil(resolving)));
}

namespace {

TransitionSeries continuum_series(double kbar, const TimeGrid& grid, SeriesKind kind) {
    grid.validate();
    const auto density = SemicircleDensity::sparse(kbar);
    const ChebyshevRule rule(density, quadrature_node_count(density, grid.back()));

    TransitionSeries out{grid, kind, {}, {}};
    out.values.reserve(grid.size());
    for (const double t : grid.points) {
        double value;
        if (kind == SeriesKind::Classical) {
            value = rule.integrate([t](double e) { return std::exp(-t * e); });
        } else {
            double re = 0.0, im = 0.0;
            for (size_t i = 0; i < rule.nodes.size(); ++i) {
                re += rule.weights[i] * std::cos(t * rule.nodes[i]);
                im -= rule.weights[i] * std::sin(t * rule.nodes[i]);
            }
            value = re * re + im * im;
        }
        if (!std::isfinite(value))
            throw NumericalError("continuum quadrature overflowed at t=" + std::to_string(t), value);
        out.values.push_back(value);
    }
    return out;
}

} // namespace

TransitionSeries continuum_classical(double kbar, const TimeGrid& grid) {
    return continuum_series(kbar, grid, SeriesKind::Classical);
}

TransitionSeries continuum_amplitude(double kbar, const TimeGrid& grid) {
    return continuum_series(kbar, grid, SeriesKind::AmplitudeBound);
}

std::vector<std::pair<double, double>> extract_local_maxima(const TransitionSeries& series,
                                                            double min_period) {
    if (series.matrix_form() || series.values.empty())
        throw ParamError("local maxima need a scalar series");
    const auto& t = series.grid.points;
    const auto& v = series.values;
    if (min_period > 0.0) {
        const double required = min_period / 10.0;
        for (size_t i = 1; i < t.size(); ++i) {
            const double dt = t[i] - t[i - 1];
            if (dt > required)
                throw ParamError("grid step " + std::to_string(dt) + " near t=" +
                                 std::to_string(t[i]) + " under-resolves the oscillation; need step <= " +
                                 std::to_string(required) + " (10 points per period " +
                                 std::to_string(min_period) + ")");
        }
    }
    std::vector<std::pair<double, double>> maxima;
    for (size_t i = 1; i + 1 < v.size(); ++i)
        if (v[i] > v[i - 1] && v[i] > v[i + 1]) maxima.emplace_back(t[i], v[i]);
    return maxima;
}

namespace {

struct LeastSquares {
    double slope = 0.0, intercept = 0.0, residual_rms = 0.0;
    int points = 0;
};

LeastSquares linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
    const int n = static_cast<int>(x.size());
    double sx = 0.0, sy = 0.0;
    for (int i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0.0, sxy = 0.0;
    for (int i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    LeastSquares fit;
    fit.points = n;
    fit.slope = sxx > 0.0 ? sxy / sxx : 0.0;
    fit.intercept = my - fit.slope * mx;
    double rss = 0.0;
    for (int i = 0; i < n; ++i) {
        const double r = y[i] - (fit.intercept + fit.slope * x[i]);
        rss += r * r;
    }
    fit.residual_rms = std::sqrt(rss / n);
    return fit;
}

void collect_window(const std::vector<std::pair<double, double>>& points, double lo, double hi,
                    std::vector<double>& t, std::vector<double>& v) {
    if (!(lo < hi)) throw ParamError("fit window requires lo < hi");
    for (const auto& [time, value] : points) {
        if (time < lo || time > hi) continue;
        if (!(value > 0.0))
            throw ParamError("non-positive value " + std::to_string(value) + " at t=" +
                             std::to_string(time) + " inside fit window");
        t.push_back(time);
        v.push_back(value);
    }
    if (t.size() < 5)
        throw ParamError("fit window [" + std::to_string(lo) + ", " + std::to_string(hi) +
                         "] holds only " + std::to_string(t.size()) + " points; need >= 5");
}

} // namespace

PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& points, double lo, double hi) {
    std::vector<double> t, v;
    collect_window(points, lo, hi, t, v);
    for (auto& x : t) x = std::log(x);
    for (auto& y : v) y = std::log(y);
    const auto fit = linear_fit(t, v);
    return PowerLawFit{fit.slope, std::exp(fit.intercept), lo, hi, fit.residual_rms, fit.points};
}

ExponentialFit fit_exponential(const std::vector<std::pair<double, double>>& points, double lo,
                               double hi) {
    std::vector<double> t, v;
    collect_window(points, lo, hi, t, v);
    for (auto& y : v) y = std::log(y);
    const auto fit = linear_fit(t, v);
    return ExponentialFit{-fit.slope, std::exp(fit.intercept), lo, hi, fit.residual_rms, fit.points};
}

double envelope_at(const std::vector<std::pair<double, double>>& maxima, double t) {
    if (maxima.empty()) throw ParamError("empty maxima list");
    if (t <= maxima.front().first) return maxima.front().second;
    if (t >= maxima.back().first) return maxima.back().second;
    for (size_t i = 1; i < maxima.size(); ++i) {
        if (t > maxima[i].first) continue;
        const auto& [t0, v0] = maxima[i - 1];
        const auto& [t1, v1] = maxima[i];
        const double w = (std::log(t) - std::log(t0)) / (std::log(t1) - std::log(t0));
        return std::exp(std::log(v0) + w * (std::log(v1) - std::log(v0)));
    }
    return maxima.back().second;
}

EfficiencyReport compare_efficiency(double kbar, double window_lo, double window_hi) {
    if (!(kbar > 0.0)) throw ParamError("average degree must be positive");
    if (!(window_lo > 0.0 && window_lo < window_hi)) throw ParamError("invalid fit window");

    EfficiencyReport report;
    report.kbar = kbar;

    const TimeGrid plot_grid = TimeGrid::default_log();
    report.classical = continuum_classical(kbar, plot_grid);
    report.amplitude = continuum_amplitude(kbar, plot_grid);

    // dense grid so every oscillation of the amplitude is resolved
    const double sigma = std::sqrt(kbar);
    const double period = M_PI / (2.0 * sigma);
    const double step = period / 20.0;
    const double lo = std::max(window_lo * 0.5, step);
    const double hi = window_hi * 1.05;
    const int count = static_cast<int>(std::ceil((hi - lo) / step)) + 1;
    const auto dense = continuum_amplitude(kbar, TimeGrid::linear(lo, hi, count));
    report.maxima = extract_local_maxima(dense, period);

    report.maxima_fit = fit_power_law(report.maxima, window_lo, window_hi);

    // steep decays underflow to exact zero inside the window; fit only the
    // span where the values are still positive
    std::vector<std::pair<double, double>> classical_points;
    double pos_lo = window_hi, pos_hi = window_lo;
    for (size_t i = 0; i < report.classical.grid.size(); ++i) {
        const double t = report.classical.grid.points[i];
        const double v = report.classical.values[i];
        if (t < window_lo || t > window_hi || !(v > 0.0)) continue;
        classical_points.emplace_back(t, v);
        pos_lo = std::min(pos_lo, t);
        pos_hi = std::max(pos_hi, t);
    }
    if (classical_points.size() >= 5) {
        report.classical_fit = fit_power_law(classical_points, pos_lo, pos_hi);
        // tail-only window for the exponential test; earlier times still
        // carry the algebraic prefactor
        const double tail_lo = pos_lo + 2.0 * (pos_hi - pos_lo) / 3.0;
        report.classical_exp_fit = fit_exponential(classical_points, tail_lo, pos_hi);
        report.classical_is_exponential = report.classical_fit.residual_rms > 0.1 &&
                                          report.classical_exp_fit.residual_rms < 0.02;
    } else {
        // decayed below the floating-point floor inside the window
        report.classical_is_exponential = true;
    }

    report.verdict = report.classical_is_exponential ||
                             report.classical_fit.exponent <= report.maxima_fit.exponent
                         ? TransportVerdict::ClassicalMoreEfficient
                         : TransportVerdict::QuantumMoreEfficient;
    return report;
}

double ks_distance(const std::vector<double>& sorted_sample, const SemicircleDensity& density) {
    if (sorted_sample.empty()) throw ParamError("empty sample");
    const double n = static_cast<double>(sorted_sample.size());
    double worst = 0.0;
    for (size_t i = 0; i < sorted_sample.size(); ++i) {
        const double f = density.cdf(sorted_sample[i]);
        worst = std::max(worst, std::fabs(f - static_cast<double>(i) / n));
        worst = std::max(worst, std::fabs(f - static_cast<double>(i + 1) / n));
    }
    return worst;
}

} // namespace qwalk
