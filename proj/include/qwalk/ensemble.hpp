#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qwalk/continuum.hpp"
#include "qwalk/graph_gen.hpp"
#include "qwalk/transport.hpp"

namespace qwalk {

inline constexpr const char* kArtifactVersion = "1.0.0";

struct EnsembleConfig {
    GraphModelParams params; // params.seed is the master seed
    int realizations = 100;
    TimeGrid grid = TimeGrid::default_linear();
    double degeneracy_tol = -1.0; // negative selects the spectral default
    int workers = 0;              // 0: QWALK_WORKERS env var, then hardware
    bool with_series = true;      // accumulate mean return-probability series
    bool with_chi_matrix = true;  // accumulate the full mean chi matrix

    void validate() const;
};

/// Everything needed to reproduce a run bit for bit.
struct RunManifest {
    std::string artifact_version = kArtifactVersion;
    std::string command;
    std::string rng_algorithm;
    std::string rng_version;
    std::string seed_derivation;
    GraphModelParams params;
    int realizations = 0;
    TimeGrid grid;
    double degeneracy_tol = 0.0; // resolved value
    double jacobi_tol = 0.0;
    std::vector<std::uint64_t> derived_seeds;
    std::vector<int> resample_counts;
    int workers = 0;
    double wall_clock_sec = 0.0;
    std::vector<std::string> outputs;
};

struct EnsembleResult {
    std::vector<double> mean_pbar;  // over config.grid; empty if with_series off
    std::vector<double> mean_pibar;
    Matrix mean_chi;                // empty if with_chi_matrix off
    double mean_chi_bar = 0.0;
    std::vector<double> per_realization_chi_bar;
    RunManifest manifest;
};

/// Runs R independent realizations (derived seeds) and averages them in
/// realization-index order, so the result is identical for any worker count.
EnsembleResult run_ensemble(const EnsembleConfig& config);

struct Histogram {
    double lo = 0.0, hi = 0.0;
    std::vector<long long> counts;
    long long below = 0, above = 0;
    long long total() const;
};

Histogram histogram(const std::vector<double>& values, double lo, double hi, int bins);

struct ChiHistograms {
    Histogram offdiag;
    Histogram diag;
};

/// Distributions of the off-diagonal and diagonal entries of mean_chi.
ChiHistograms chi_distribution(const EnsembleResult& result, int bins = 50,
                               double offdiag_lo = 0.005, double offdiag_hi = 0.015,
                               double diag_lo = 0.02, double diag_hi = 0.1);

struct DegreeScanRow {
    int degree = 0;
    double er_chi_bar = 0.0;
    double config_chi_bar = 0.0;
};

/// Mean long-time return probability versus degree, ER (p = k/(n-1)) next to
/// the configuration model.
std::vector<DegreeScanRow> scan_chi_vs_degree(int n, const std::vector<int>& degrees,
                                              int realizations, std::uint64_t master_seed,
                                              int workers = 0);

struct SizeScanRow {
    int n = 0;
    double er_chi_bar = 0.0;
    double config_chi_bar = 0.0;
};

struct SizeScanResult {
    std::vector<SizeScanRow> rows;
    PowerLawFit er_fit;    // slope of log chi_bar versus log N
    PowerLawFit config_fit;
};

std::vector<SizeScanRow> scan_chi_vs_size_rows(const std::vector<int>& sizes, int degree,
                                               int realizations, std::uint64_t master_seed,
                                               int workers = 0);
SizeScanResult scan_chi_vs_size(const std::vector<int>& sizes, int degree, int realizations,
                                std::uint64_t master_seed, int workers = 0);

struct EdgeRemovalRow {
    long long m = 0;
    double chi_bar = 0.0;
};

struct EdgeRemovalScanResult {
    std::vector<EdgeRemovalRow> rows;
    ExponentialFit fit; // over rows with m inside [fit_lo, fit_hi]
    double fit_lo = 0.0, fit_hi = 200.0;
};

EdgeRemovalScanResult edge_removal_scan(int n, const std::vector<long long>& m_values,
                                        int realizations, std::uint64_t master_seed,
                                        int workers = 0, double fit_lo = 0.0, double fit_hi = 200.0);

/// Worker count resolution: explicit request, then QWALK_WORKERS, then
/// hardware concurrency; always at least 1.
int resolve_workers(int requested);

} // namespace qwalk
