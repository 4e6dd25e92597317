#include "qwalk/ensemble.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <stdexcept>
#include <thread>

#include "qwalk/errors.hpp"

namespace qwalk {

void EnsembleConfig::validate() const {
    params.validate();
    if (realizations < 1) throw ParamError("realizations must be >= 1");
    grid.validate();
    if (workers < 0) throw ParamError("workers must be >= 0");
}

int resolve_workers(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("QWALK_WORKERS")) {
        const int parsed = std::atoi(env);
        if (parsed > 0) return parsed;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

namespace {

struct RealizationOutput {
    std::vector<double> pbar;
    std::vector<double> pibar;
    Matrix chi;
    double chi_bar = 0.0;
    int resamples = 0;
};

// Work shared by every realization of one ensemble.
struct RealizationJob {
    const EnsembleConfig& config;

    RealizationOutput run(std::uint64_t seed) const {
        Rng rng(seed);
        RealizationOutput out;
        const Graph g = generate(config.params, rng, &out.resamples);

        EigenOptions eig;
        eig.degeneracy_tol = config.degeneracy_tol;
        const Spectrum spectrum = eigendecompose(laplacian(g), eig);

        if (config.with_series) {
            out.pbar = avg_return_classical(spectrum, config.grid).values;
            out.pibar = avg_return_quantum(spectrum, config.grid).values;
        }
        if (config.with_chi_matrix) {
            LongTimeMatrix lt = long_time_average(spectrum);
            out.chi = std::move(lt.chi);
            out.chi_bar = lt.chi_bar;
        } else {
            out.chi_bar = long_time_chi_bar(spectrum);
        }
        return out;
    }
};

} // namespace

EnsembleResult run_ensemble(const EnsembleConfig& config) {
    config.validate();
    const auto started = std::chrono::steady_clock::now();

    const int total = config.realizations;
    const int workers = std::min(resolve_workers(config.workers), total);

    std::vector<std::uint64_t> seeds(total);
    for (int r = 0; r < total; ++r) seeds[r] = derive_seed(config.params.seed, r);

    std::vector<RealizationOutput> slots(total);
    std::vector<std::exception_ptr> failures(total);
    const RealizationJob job{config};

    auto work = [&](int r) {
        try {
            slots[r] = job.run(seeds[r]);
        } catch (...) {
            failures[r] = std::current_exception();
        }
    };

    if (workers <= 1) {
        for (int r = 0; r < total; ++r) work(r);
    } else {
        std::atomic<int> cursor{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    const int r = cursor.fetch_add(1);
                    if (r >= total) return;
                    work(r);
                }
            });
        }
        for (auto& t : pool) t.join();
    }

    for (int r = 0; r < total; ++r) {
        if (!failures[r]) continue;
        try {
            std::rethrow_exception(failures[r]);
        } catch (const std::exception& e) {
            throw GenerationError("realization " + std::to_string(r) + " failed: " + e.what(), r);
        }
    }

    // reduce in ascending realization order
    EnsembleResult result;
    result.per_realization_chi_bar.resize(total);
    if (config.with_series) {
        result.mean_pbar.assign(config.grid.size(), 0.0);
        result.mean_pibar.assign(config.grid.size(), 0.0);
    }
    if (config.with_chi_matrix) result.mean_chi = Matrix(config.params.n);

    for (int r = 0; r < total; ++r) {
        const auto& slot = slots[r];
        result.per_realization_chi_bar[r] = slot.chi_bar;
        if (config.with_series) {
            for (size_t i = 0; i < result.mean_pbar.size(); ++i) {
                result.mean_pbar[i] += slot.pbar[i];
                result.mean_pibar[i] += slot.pibar[i];
            }
        }
        if (config.with_chi_matrix)
            for (size_t i = 0; i < result.mean_chi.size(); ++i)
                result.mean_chi.data()[i] += slot.chi.data()[i];
    }
    const double scale = 1.0 / total;
    for (auto& v : result.mean_pbar) v *= scale;
    for (auto& v : result.mean_pibar) v *= scale;
    for (size_t i = 0; i < result.mean_chi.size(); ++i) result.mean_chi.data()[i] *= scale;

    double chi_sum = 0.0;
    for (const double c : result.per_realization_chi_bar) chi_sum += c;
    result.mean_chi_bar = chi_sum * scale;

    RunManifest& manifest = result.manifest;
    manifest.command = "ensemble";
    manifest.rng_algorithm = std::string(kRngAlgorithm);
    manifest.rng_version = std::string(kRngVersion);
    manifest.seed_derivation = std::string(kSeedDerivation);
    manifest.params = config.params;
    manifest.realizations = total;
    manifest.grid = config.grid;
    manifest.degeneracy_tol = config.degeneracy_tol;
    manifest.jacobi_tol = EigenOptions{}.convergence_tol;
    manifest.derived_seeds = std::move(seeds);
    manifest.resample_counts.resize(total);
    for (int r = 0; r < total; ++r) manifest.resample_counts[r] = slots[r].resamples;
    manifest.workers = workers;
    manifest.wall_clock_sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return result;
}

long long Histogram::total() const {
    long long sum = below + above;
    for (const long long c : counts) sum += c;
    return sum;
}

Histogram histogram(const std::vector<double>& values, double lo, double hi, int bins) {
    if (!(lo < hi)) throw ParamError("histogram range requires lo < hi");
    if (bins < 1) throw ParamError("histogram needs at least one bin");
    Histogram h{lo, hi, std::vector<long long>(bins, 0), 0, 0};
    const double width = (hi - lo) / bins;
    for (const double v : values) {
        if (v < lo) {
            ++h.below;
        } else if (v >= hi) {
            ++h.above;
        } else {
            ++h.counts[static_cast<int>((v - lo) / width)];
        }
    }
    return h;
}

ChiHistograms chi_distribution(const EnsembleResult& result, int bins, double offdiag_lo,
                               double offdiag_hi, double diag_lo, double diag_hi) {
    if (result.mean_chi.empty()) throw ParamError("ensemble result lacks a chi matrix");
    const int n = result.mean_chi.n();
    std::vector<double> off, diag;
    off.reserve(static_cast<size_t>(n) * (n - 1));
    diag.reserve(n);
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j)
            (k == j ? diag : off).push_back(result.mean_chi(k, j));
    return ChiHistograms{histogram(off, offdiag_lo, offdiag_hi, bins),
                         histogram(diag, diag_lo, diag_hi, bins)};
}

namespace {

// One scan point: ensemble of chi_bar values only.
double chi_bar_point(GraphModelParams params, int realizations, int workers) {
    EnsembleConfig config;
    config.params = params;
    config.realizations = realizations;
    config.with_series = false;
    config.with_chi_matrix = false;
    config.workers = workers;
    return run_ensemble(config).mean_chi_bar;
}

} // namespace

std::vector<DegreeScanRow> scan_chi_vs_degree(int n, const std::vector<int>& degrees,
                                              int realizations, std::uint64_t master_seed,
                                              int workers) {
    if (degrees.empty()) throw ParamError("degree scan needs at least one degree");
    std::vector<DegreeScanRow> rows;
    rows.reserve(degrees.size());
    for (size_t i = 0; i < degrees.size(); ++i) {
        const int k = degrees[i];
        GraphModelParams er;
        er.model = GraphModel::Er;
        er.n = n;
        er.p = static_cast<double>(k) / (n - 1);
        er.seed = derive_seed(master_seed, 2 * i);
        er.validate();

        GraphModelParams cfg;
        cfg.model = GraphModel::Configuration;
        cfg.n = n;
        cfg.k = k;
        cfg.seed = derive_seed(master_seed, 2 * i + 1);
        cfg.validate();

        rows.push_back({k, chi_bar_point(er, realizations, workers),
                        chi_bar_point(cfg, realizations, workers)});
    }
    return rows;
}

std::vector<SizeScanRow> scan_chi_vs_size_rows(const std::vector<int>& sizes, int degree,
                                               int realizations, std::uint64_t master_seed,
                                               int workers) {
    if (sizes.empty()) throw ParamError("size scan needs at least one size");
    std::vector<SizeScanRow> rows;
    rows.reserve(sizes.size());
    for (size_t i = 0; i < sizes.size(); ++i) {
        const int n = sizes[i];
        if (n <= degree) throw ParamError("size " + std::to_string(n) +
                                          " must exceed degree " + std::to_string(degree));
        GraphModelParams er;
        er.model = GraphModel::Er;
        er.n = n;
        er.p = static_cast<double>(degree) / (n - 1);
        er.seed = derive_seed(master_seed, 2 * i);
        er.validate();

        GraphModelParams cfg;
        cfg.model = GraphModel::Configuration;
        cfg.n = n;
        cfg.k = degree;
        cfg.seed = derive_seed(master_seed, 2 * i + 1);
        cfg.validate();

        rows.push_back({n, chi_bar_point(er, realizations, workers),
                        chi_bar_point(cfg, realizations, workers)});
    }
    return rows;
}

SizeScanResult scan_chi_vs_size(const std::vector<int>& sizes, int degree, int realizations,
                                std::uint64_t master_seed, int workers) {
    SizeScanResult result;
    result.rows = scan_chi_vs_size_rows(sizes, degree, realizations, master_seed, workers);

    std::vector<std::pair<double, double>> er_points, cfg_points;
    for (const auto& row : result.rows) {
        er_points.emplace_back(row.n, row.er_chi_bar);
        cfg_points.emplace_back(row.n, row.config_chi_bar);
    }
    if (result.rows.size() >= 5) {
        const double lo = result.rows.front().n * 0.999;
        const double hi = result.rows.back().n * 1.001;
        result.er_fit = fit_power_law(er_points, lo, hi);
        result.config_fit = fit_power_law(cfg_points, lo, hi);
    }
    return result;
}

EdgeRemovalScanResult edge_removal_scan(int n, const std::vector<long long>& m_values,
                                        int realizations, std::uint64_t master_seed, int workers,
                                        double fit_lo, double fit_hi) {
    if (m_values.empty()) throw ParamError("edge removal scan needs at least one m");
    EdgeRemovalScanResult result;
    result.fit_lo = fit_lo;
    result.fit_hi = fit_hi;
    result.rows.reserve(m_values.size());
    for (size_t i = 0; i < m_values.size(); ++i) {
        GraphModelParams params;
        params.model = GraphModel::CompleteMinusM;
        params.n = n;
        params.m = m_values[i];
        params.seed = derive_seed(master_seed, i);
        params.validate();
        result.rows.push_back({m_values[i], chi_bar_point(params, realizations, workers)});
    }

    std::vector<std::pair<double, double>> points;
    for (const auto& row : result.rows)
        points.emplace_back(static_cast<double>(row.m), row.chi_bar);
    // the fit needs five points in its window; short scans skip it
    long long inside = 0;
    for (const auto& [m, chi] : points)
        if (m >= fit_lo && m <= fit_hi) ++inside;
    if (inside >= 5) result.fit = fit_exponential(points, fit_lo, fit_hi);
    return result;
}

} // namespace qwalk
