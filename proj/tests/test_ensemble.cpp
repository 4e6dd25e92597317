#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qwalk/ensemble.hpp"
#include "qwalk/errors.hpp"

using namespace qwalk;

namespace {

EnsembleConfig small_er_config(int n, double p, int realizations, std::uint64_t seed) {
    EnsembleConfig config;
    config.params.model = GraphModel::Er;
    config.params.n = n;
    config.params.p = p;
    config.params.seed = seed;
    config.realizations = realizations;
    config.grid = TimeGrid::linear(0.0, 20.0, 101);
    return config;
}

} // namespace

TEST_CASE("ensemble of one equals the single realization") {
    auto config = small_er_config(30, 0.3, 1, 4242);
    const auto result = run_ensemble(config);

    Rng rng(derive_seed(4242, 0));
    const Graph g = generate(config.params, rng);
    const Spectrum s = eigendecompose(laplacian(g));
    const auto pbar = avg_return_classical(s, config.grid);
    const auto pibar = avg_return_quantum(s, config.grid);
    const auto lt = long_time_average(s);

    CHECK(result.mean_pbar == pbar.values);
    CHECK(result.mean_pibar == pibar.values);
    CHECK(result.mean_chi == lt.chi);
    CHECK(result.mean_chi_bar == lt.chi_bar);
    CHECK(result.per_realization_chi_bar.size() == 1);
}

TEST_CASE("worker count does not change a single bit") {
    auto config = small_er_config(25, 0.25, 12, 77);
    config.workers = 1;
    const auto serial = run_ensemble(config);
    config.workers = 2;
    const auto pair = run_ensemble(config);
    config.workers = 5;
    const auto many = run_ensemble(config);

    CHECK(serial.mean_pbar == pair.mean_pbar);
    CHECK(serial.mean_pibar == pair.mean_pibar);
    CHECK(serial.mean_chi == pair.mean_chi);
    CHECK(serial.mean_chi_bar == pair.mean_chi_bar);
    CHECK(serial.per_realization_chi_bar == pair.per_realization_chi_bar);

    CHECK(serial.mean_chi == many.mean_chi);
    CHECK(serial.per_realization_chi_bar == many.per_realization_chi_bar);
}

TEST_CASE("ensemble means satisfy their invariants") {
    const auto result = run_ensemble(small_er_config(40, 0.3, 20, 1001));
    const int n = result.mean_chi.n();

    // chi_bar ties to the trace of the mean matrix
    double trace = 0.0;
    for (int j = 0; j < n; ++j) trace += result.mean_chi(j, j);
    CHECK(std::fabs(result.mean_chi_bar - trace / n) <= 1e-12);

    // averaging preserves stochasticity
    for (int j = 0; j < n; ++j) {
        double col = 0.0;
        for (int k = 0; k < n; ++k) col += result.mean_chi(k, j);
        CHECK(std::fabs(col - 1.0) <= 1e-8);
    }

    for (const double chi : result.per_realization_chi_bar) CHECK(chi >= 1.0 / n);

    // p=0.3 at n=40 is connected in practice: classical end point at 1/N
    CHECK(std::fabs(result.mean_pbar.back() - 1.0 / n) <= 1e-4);
    for (size_t i = 1; i < result.mean_pbar.size(); ++i)
        CHECK(result.mean_pbar[i] <= result.mean_pbar[i - 1] + 1e-12);

    // manifest carries the reproduction data
    CHECK(result.manifest.realizations == 20);
    REQUIRE(result.manifest.derived_seeds.size() == 20);
    for (int r = 0; r < 20; ++r)
        CHECK(result.manifest.derived_seeds[r] == derive_seed(1001, r));
    CHECK(result.manifest.rng_algorithm == std::string(kRngAlgorithm));
}

TEST_CASE("scalar-only mode matches the full accumulation") {
    auto config = small_er_config(30, 0.2, 10, 31337);
    const auto full = run_ensemble(config);
    config.with_series = false;
    config.with_chi_matrix = false;
    const auto lean = run_ensemble(config);
    CHECK(lean.mean_pbar.empty());
    CHECK(lean.mean_chi.empty());
    REQUIRE(lean.per_realization_chi_bar.size() == full.per_realization_chi_bar.size());
    for (size_t r = 0; r < lean.per_realization_chi_bar.size(); ++r)
        CHECK(std::fabs(lean.per_realization_chi_bar[r] - full.per_realization_chi_bar[r]) <= 1e-12);
}

TEST_CASE("generation failure reports the realization") {
    EnsembleConfig config;
    config.params.model = GraphModel::CompleteMinusM;
    config.params.n = 4;
    config.params.m = 6; // empty graph
    config.params.require_connected = true;
    config.params.seed = 5;
    config.realizations = 3;
    CHECK_THROWS_AS(run_ensemble(config), GenerationError);
}

TEST_CASE("histogram counting") {
    const std::vector<double> values{-1.0, 0.05, 0.15, 0.25, 0.35, 0.95, 2.0};
    const auto h = histogram(values, 0.0, 1.0, 10);
    CHECK(h.below == 1);
    CHECK(h.above == 1);
    CHECK(h.counts[0] == 1);
    CHECK(h.counts[1] == 1);
    CHECK(h.counts[9] == 1);
    CHECK(h.total() == static_cast<long long>(values.size()));
    CHECK_THROWS_AS(histogram(values, 1.0, 1.0, 10), ParamError);
    CHECK_THROWS_AS(histogram(values, 0.0, 1.0, 0), ParamError);
}

TEST_CASE("chi distribution splits diagonal from off-diagonal") {
    // complete graph: every realization identical, chi known in closed form
    EnsembleConfig config;
    config.params.model = GraphModel::Complete;
    config.params.n = 100;
    config.params.seed = 1;
    config.realizations = 2;
    config.grid = TimeGrid::linear(0.0, 1.0, 3);
    const auto result = run_ensemble(config);

    const auto hists = chi_distribution(result, 50, 0.005, 0.015, 0.9, 1.0);
    CHECK(hists.diag.total() == 100);
    CHECK(hists.offdiag.total() == 100 * 99);
    // all diagonal mass in the bin holding 0.9802
    const int bin = static_cast<int>((0.9802 - 0.9) / (0.1 / 50));
    CHECK(hists.diag.counts[bin] == 100);
    // off-diagonal entries are (1 - 0.9802)/99, far below the range
    CHECK(hists.offdiag.below == 100 * 99);

    CHECK_THROWS_AS(chi_distribution(result, 50, 0.015, 0.005, 0.9, 1.0), ParamError);
}

TEST_CASE("er and configuration chi separate at matched degree") {
    const int n = 60, degree = 10, realizations = 30;

    EnsembleConfig er = small_er_config(n, static_cast<double>(degree) / (n - 1), realizations, 9);
    er.with_series = false;
    EnsembleConfig cfg = er;
    cfg.params.model = GraphModel::Configuration;
    cfg.params.k = degree;

    const auto er_result = run_ensemble(er);
    const auto cfg_result = run_ensemble(cfg);

    // higher return probability on ER, so lower off-diagonal mean
    CHECK(er_result.mean_chi_bar > cfg_result.mean_chi_bar);
    auto offdiag_mean = [](const EnsembleResult& r) {
        double sum = 0.0;
        const int n = r.mean_chi.n();
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j)
                if (k != j) sum += r.mean_chi(k, j);
        return sum / (static_cast<double>(n) * (n - 1));
    };
    CHECK(offdiag_mean(er_result) < offdiag_mean(cfg_result));
}

TEST_CASE("degree scan touches both models and the complete limit") {
    const auto rows = scan_chi_vs_degree(40, {6, 39}, 8, 2718);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].degree == 6);
    // degree n-1 collapses both models onto the complete graph
    const double exact = (40.0 * 40.0 - 2.0 * 40.0 + 2.0) / (40.0 * 40.0);
    CHECK(rows[1].er_chi_bar == doctest::Approx(exact).epsilon(1e-10));
    CHECK(rows[1].config_chi_bar == doctest::Approx(exact).epsilon(1e-10));
    CHECK(rows[1].er_chi_bar > rows[0].er_chi_bar);
}

TEST_CASE("size scan fits a negative slope") {
    const auto scan = scan_chi_vs_size({30, 45, 60, 80, 100}, 10, 8, 123);
    REQUIRE(scan.rows.size() == 5);
    CHECK(scan.er_fit.exponent < -0.5);
    CHECK(scan.config_fit.exponent < -0.5);
    CHECK(scan.rows.front().er_chi_bar > scan.rows.back().er_chi_bar);
    CHECK_THROWS_AS(scan_chi_vs_size({30, 10}, 10, 4, 1), ParamError);
}

TEST_CASE("edge removal scan anchors at the complete graph") {
    const auto scan = edge_removal_scan(30, {0, 10, 20, 40, 80, 160}, 8, 99);
    REQUIRE(scan.rows.size() == 6);
    const double exact = (30.0 * 30.0 - 60.0 + 2.0) / 900.0;
    CHECK(scan.rows[0].chi_bar == doctest::Approx(exact).epsilon(1e-10));
    CHECK(scan.fit.rate > 0.0);
    CHECK(scan.rows.back().chi_bar < scan.rows.front().chi_bar);
}

TEST_CASE("scans are reproducible from the master seed") {
    const auto a = scan_chi_vs_degree(30, {5, 10}, 6, 555);
    const auto b = scan_chi_vs_degree(30, {5, 10}, 6, 555);
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].er_chi_bar == b[i].er_chi_bar);
        CHECK(a[i].config_chi_bar == b[i].config_chi_bar);
    }
}

TEST_CASE("config validation") {
    EnsembleConfig config = small_er_config(30, 0.5, 0, 1);
    CHECK_THROWS_AS(config.validate(), ParamError);
    config.realizations = 2;
    config.workers = -2;
    CHECK_THROWS_AS(config.validate(), ParamError);
}
