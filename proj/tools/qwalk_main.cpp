#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qwalk/continuum.hpp"
#include "qwalk/ensemble.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/graph_gen.hpp"
#include "qwalk/io.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/transport.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitIo = 4;

qwalk::RunManifest base_manifest(const std::string& command) {
    qwalk::RunManifest manifest;
    manifest.command = command;
    manifest.rng_algorithm = std::string(qwalk::kRngAlgorithm);
    manifest.rng_version = std::string(qwalk::kRngVersion);
    manifest.seed_derivation = std::string(qwalk::kSeedDerivation);
    return manifest;
}

void ensure_outdir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw qwalk::IoError("cannot create output directory " + dir + ": " + ec.message());
}

// ---------------------------------------------------------------- gen

struct GenArgs {
    std::string model;
    int n = 0;
    double p = -1.0;
    int k = 0;
    long long m = -1;
    std::uint64_t seed = 0;
    bool require_connected = false;
    long long swaps = 0;
    std::string output;
};

qwalk::GraphModelParams to_params(const GenArgs& args) {
    qwalk::GraphModelParams params;
    params.model = qwalk::model_from_name(args.model);
    params.n = args.n;
    params.p = args.p;
    params.k = args.k;
    params.m = args.m;
    params.seed = args.seed;
    params.require_connected = args.require_connected;
    params.validate();
    return params;
}

int run_gen(const GenArgs& args) {
    const auto params = to_params(args);
    qwalk::Rng rng(params.seed);
    int resamples = 0;
    qwalk::Graph g = qwalk::generate(params, rng, &resamples);
    if (args.swaps > 0) g = qwalk::randomize_by_edge_interchange(g, args.swaps, rng);

    std::ostringstream body;
    body << "# n=" << g.n << "\n";
    for (const auto& [u, v] : g.edges) body << u << " " << v << "\n";
    qwalk::atomic_write_text(args.output, body.str());

    auto manifest = base_manifest("gen");
    manifest.params = params;
    manifest.resample_counts = {resamples};
    manifest.outputs = {args.output};
    qwalk::write_manifest_json(args.output + ".manifest.json", manifest);

    std::cerr << "wrote " << args.output << " (" << g.edge_count() << " edges)\n";
    return 0;
}

// ---------------------------------------------------------------- spectrum

int run_spectrum(const std::string& input, const std::string& output, const std::string& vectors,
                 double tol) {
    const qwalk::Graph g = qwalk::read_edge_file(input);
    qwalk::EigenOptions options;
    options.degeneracy_tol = tol;

    auto manifest = base_manifest("spectrum");
    manifest.jacobi_tol = options.convergence_tol;
    if (vectors.empty()) {
        // eigenvalues alone take the fast tridiagonal route
        qwalk::write_spectrum_csv(output, qwalk::eigenvalues_only(qwalk::laplacian(g)));
    } else {
        const qwalk::Spectrum s = qwalk::eigendecompose(qwalk::laplacian(g), options);
        qwalk::write_spectrum_csv(output, s.eigenvalues);
        qwalk::write_vectors_csv(vectors, s.vectors);
        manifest.degeneracy_tol = s.degeneracy_tol;
        manifest.outputs.push_back(vectors);
    }
    manifest.outputs.insert(manifest.outputs.begin(), output);
    qwalk::write_manifest_json(output + ".manifest.json", manifest);
    return 0;
}

// ---------------------------------------------------------------- evolve / longtime

qwalk::TimeGrid make_grid(const std::string& kind, double tmin, double tmax, int points) {
    if (kind == "lin" || kind == "linear")
        return qwalk::TimeGrid::linear(tmin, tmax, points);
    if (kind == "log")
        return qwalk::TimeGrid::logarithmic(tmin > 0.0 ? tmin : 1e-2, tmax, points);
    throw qwalk::ParamError("unknown grid kind '" + kind + "' (use lin or log)");
}

int run_evolve(const std::string& input, const std::string& kind, const std::string& grid_kind,
               double tmin, double tmax, int points, bool full_matrix, const std::string& output) {
    const qwalk::Graph g = qwalk::read_edge_file(input);
    const qwalk::Spectrum s = qwalk::eigendecompose(qwalk::laplacian(g));
    const qwalk::TimeGrid grid = make_grid(grid_kind, tmin, tmax, points);

    qwalk::TransitionSeries series;
    if (kind == "classical") {
        series = full_matrix ? qwalk::classical_transition(s, grid)
                             : qwalk::avg_return_classical(s, grid);
    } else if (kind == "quantum") {
        series = full_matrix ? qwalk::quantum_transition(s, grid)
                             : qwalk::avg_return_quantum(s, grid);
    } else if (kind == "bound") {
        if (full_matrix) throw qwalk::ParamError("--full-matrix does not apply to the bound");
        series = qwalk::avg_amplitude_bound(s, grid);
    } else {
        throw qwalk::ParamError("unknown kind '" + kind + "'");
    }
    if (series.matrix_form())
        qwalk::write_matrix_series_csv(output, series);
    else
        qwalk::write_series_csv(output, series);

    auto manifest = base_manifest("evolve");
    manifest.grid = grid;
    manifest.outputs = {output};
    qwalk::write_manifest_json(output + ".manifest.json", manifest);
    return 0;
}

int run_longtime(const std::string& input, const std::string& output, double tol) {
    const qwalk::Graph g = qwalk::read_edge_file(input);
    qwalk::EigenOptions options;
    options.degeneracy_tol = tol;
    const qwalk::Spectrum s = qwalk::eigendecompose(qwalk::laplacian(g), options);
    const qwalk::LongTimeMatrix lt = qwalk::long_time_average(s);
    qwalk::write_chi_csv(output, lt.chi);

    auto manifest = base_manifest("longtime");
    manifest.degeneracy_tol = s.degeneracy_tol;
    manifest.outputs = {output};
    qwalk::write_manifest_json(output + ".manifest.json", manifest);
    std::cerr << "chi_bar " << qwalk::format_double(lt.chi_bar) << "\n";
    return 0;
}

// ---------------------------------------------------------------- ensemble

qwalk::TimeGrid grid_from_json(const json& j) {
    const std::string kind = j.value("kind", "linear");
    const double tmin = j.value("tmin", kind == "log" ? 1e-2 : 0.0);
    const double tmax = j.value("tmax", kind == "log" ? 1e3 : 20.0);
    const int points = j.value("points", kind == "log" ? 600 : 401);
    return make_grid(kind, tmin, tmax, points);
}

qwalk::EnsembleConfig config_from_json(json j) {
    if (j.contains("config")) j = j["config"]; // accept a manifest as a config
    qwalk::EnsembleConfig config;
    if (!j.contains("model")) throw qwalk::ParamError("config missing 'model'");
    config.params.model = qwalk::model_from_name(j["model"].get<std::string>());
    config.params.n = j.value("n", 0);
    if (j.contains("kbar")) {
        if (j.contains("p")) throw qwalk::ParamError("give either 'p' or 'kbar', not both");
        config.params.p = j["kbar"].get<double>() / (config.params.n - 1);
    }
    config.params.p = j.value("p", config.params.p);
    config.params.k = j.value("k", 0);
    config.params.m = j.value("m", static_cast<long long>(-1));
    config.params.seed = j.value("seed", 0ull);
    config.params.require_connected = j.value("require_connected", false);
    config.realizations = j.value("realizations", 100);
    if (j.contains("grid")) config.grid = grid_from_json(j["grid"]);
    config.degeneracy_tol = j.value("degeneracy_tol", -1.0);
    config.workers = j.value("workers", 0);
    return config;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw qwalk::IoError("cannot open config " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw qwalk::ParamError("config " + path + " is not valid JSON: " + e.what());
    }
    return j;
}

struct EnsembleArgs {
    std::string config_path;
    std::string outdir = ".";
    int realizations = -1;
    long long seed = -1;
    int workers = -1;
    int bins = 50;
};

int run_ensemble_cmd(const EnsembleArgs& args) {
    qwalk::EnsembleConfig config = config_from_json(load_json_file(args.config_path));
    // flags override file values
    if (args.realizations > 0) config.realizations = args.realizations;
    if (args.seed >= 0) config.params.seed = static_cast<std::uint64_t>(args.seed);
    if (args.workers >= 0) config.workers = args.workers;
    config.validate();

    qwalk::EnsembleResult result = qwalk::run_ensemble(config);

    ensure_outdir(args.outdir);
    const fs::path dir(args.outdir);
    qwalk::write_ensemble_series_csv((dir / "series.csv").string(), config.grid, result.mean_pbar,
                                     result.mean_pibar);
    qwalk::write_chi_csv((dir / "chi.csv").string(), result.mean_chi);
    qwalk::write_chi_hist_csv((dir / "chi_hist.csv").string(),
                              qwalk::chi_distribution(result, args.bins));
    result.manifest.outputs = {"series.csv", "chi.csv", "chi_hist.csv"};
    qwalk::write_manifest_json((dir / "manifest.json").string(), result.manifest);
    std::cerr << "mean chi_bar " << qwalk::format_double(result.mean_chi_bar) << "\n";
    return 0;
}

// ---------------------------------------------------------------- scans

std::string fit_json_text(const qwalk::PowerLawFit& fit) {
    json j;
    j["kind"] = "power";
    j["exponent"] = fit.exponent;
    j["prefactor"] = fit.prefactor;
    j["residual_rms"] = fit.residual_rms;
    j["window"] = {fit.window_lo, fit.window_hi};
    j["points"] = fit.points;
    return j.dump(2) + "\n";
}

json fit_to_json(const qwalk::ExponentialFit& fit) {
    json j;
    j["kind"] = "exponential";
    j["rate"] = fit.rate;
    j["prefactor"] = fit.prefactor;
    j["residual_rms"] = fit.residual_rms;
    j["window"] = {fit.window_lo, fit.window_hi};
    j["points"] = fit.points;
    return j;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        values.push_back(std::stoi(item));
    }
    if (values.empty()) throw qwalk::ParamError("empty list '" + text + "'");
    return values;
}

struct ScanArgs {
    std::string what;
    int n = 100;
    int degree = 50;
    std::string degrees = "10,20,30,40,50,60,70,80,90";
    std::string sizes = "60,80,100,150,200,300";
    std::string m_values = "0,25,50,75,100,125,150,175,200";
    int realizations = 50;
    std::uint64_t seed = 0;
    int workers = 0;
    std::string outdir = ".";
};

int run_scan(const ScanArgs& args) {
    ensure_outdir(args.outdir);
    const fs::path dir(args.outdir);
    auto manifest = base_manifest("scan/" + args.what);
    manifest.realizations = args.realizations;
    manifest.workers = qwalk::resolve_workers(args.workers);

    std::ostringstream csv;
    std::string fit_text;
    if (args.what == "degree") {
        const auto rows = qwalk::scan_chi_vs_degree(args.n, parse_int_list(args.degrees),
                                                    args.realizations, args.seed, args.workers);
        csv << "degree,er_chi_bar,config_chi_bar\n";
        for (const auto& row : rows)
            csv << row.degree << "," << qwalk::format_double(row.er_chi_bar) << ","
                << qwalk::format_double(row.config_chi_bar) << "\n";
        manifest.params.n = args.n;
    } else if (args.what == "size") {
        const auto scan = qwalk::scan_chi_vs_size(parse_int_list(args.sizes), args.degree,
                                                  args.realizations, args.seed, args.workers);
        csv << "n,er_chi_bar,config_chi_bar\n";
        for (const auto& row : scan.rows)
            csv << row.n << "," << qwalk::format_double(row.er_chi_bar) << ","
                << qwalk::format_double(row.config_chi_bar) << "\n";
        if (scan.er_fit.points > 0) {
            json jf;
            jf["er"] = {{"kind", "power"},
                        {"exponent", scan.er_fit.exponent},
                        {"prefactor", scan.er_fit.prefactor},
                        {"residual_rms", scan.er_fit.residual_rms}};
            jf["config"] = {{"kind", "power"},
                            {"exponent", scan.config_fit.exponent},
                            {"prefactor", scan.config_fit.prefactor},
                            {"residual_rms", scan.config_fit.residual_rms}};
            fit_text = jf.dump(2) + "\n";
        }
    } else if (args.what == "edge-removal") {
        std::vector<long long> ms;
        for (const int v : parse_int_list(args.m_values)) ms.push_back(v);
        const auto scan = qwalk::edge_removal_scan(args.n, ms, args.realizations, args.seed,
                                                   args.workers);
        csv << "m,chi_bar\n";
        for (const auto& row : scan.rows)
            csv << row.m << "," << qwalk::format_double(row.chi_bar) << "\n";
        if (scan.fit.points > 0) fit_text = fit_to_json(scan.fit).dump(2) + "\n";
        manifest.params.n = args.n;
    } else {
        throw qwalk::ParamError("unknown scan '" + args.what + "' (degree|size|edge-removal)");
    }

    qwalk::atomic_write_text((dir / "scan.csv").string(), csv.str());
    manifest.outputs = {"scan.csv"};
    if (!fit_text.empty()) {
        qwalk::atomic_write_text((dir / "fit.json").string(), fit_text);
        manifest.outputs.push_back("fit.json");
    }
    manifest.params.seed = args.seed;
    qwalk::write_manifest_json((dir / "manifest.json").string(), manifest);
    return 0;
}

// ---------------------------------------------------------------- continuum / fit

int run_continuum(double kbar, const std::string& grid_kind, double tmin, double tmax, int points,
                  const std::string& kind, const std::string& output) {
    const qwalk::TimeGrid grid = make_grid(grid_kind, tmin, tmax, points);
    qwalk::TransitionSeries series;
    if (kind == "classical")
        series = qwalk::continuum_classical(kbar, grid);
    else if (kind == "amplitude")
        series = qwalk::continuum_amplitude(kbar, grid);
    else
        throw qwalk::ParamError("unknown kind '" + kind + "' (classical|amplitude)");
    qwalk::write_series_csv(output, series);

    auto manifest = base_manifest("continuum");
    manifest.grid = grid;
    manifest.outputs = {output};
    qwalk::write_manifest_json(output + ".manifest.json", manifest);
    return 0;
}

int run_fit(const std::string& input, const std::string& window, bool maxima, double min_period,
            const std::string& output) {
    double lo = 0.0, hi = 0.0;
    if (std::sscanf(window.c_str(), "%lf:%lf", &lo, &hi) != 2)
        throw qwalk::ParamError("window must look like '10:100'");

    auto points = qwalk::read_series_csv(input);
    if (maxima) {
        qwalk::TransitionSeries series;
        series.kind = qwalk::SeriesKind::AmplitudeBound;
        for (const auto& [t, v] : points) {
            series.grid.points.push_back(t);
            series.values.push_back(v);
        }
        points = qwalk::extract_local_maxima(series, min_period);
    }
    const auto fit = qwalk::fit_power_law(points, lo, hi);
    qwalk::atomic_write_text(output, fit_json_text(fit));
    std::cerr << "exponent " << qwalk::format_double(fit.exponent) << " residual "
              << qwalk::format_double(fit.residual_rms) << "\n";
    return 0;
}

// ---------------------------------------------------------------- figure

void write_efficiency_outputs(const fs::path& dir, const std::string& tag, double kbar) {
    const auto report = qwalk::compare_efficiency(kbar);
    qwalk::write_series_csv((dir / ("classical_" + tag + ".csv")).string(), report.classical);
    qwalk::write_series_csv((dir / ("amplitude_" + tag + ".csv")).string(), report.amplitude);
    std::ostringstream maxima;
    maxima << "t,value\n";
    for (const auto& [t, v] : report.maxima)
        maxima << qwalk::format_double(t) << "," << qwalk::format_double(v) << "\n";
    qwalk::atomic_write_text((dir / ("maxima_" + tag + ".csv")).string(), maxima.str());

    json j;
    j["kbar"] = kbar;
    j["classical_power_fit"] = {{"exponent", report.classical_fit.exponent},
                                {"residual_rms", report.classical_fit.residual_rms}};
    j["maxima_power_fit"] = {{"exponent", report.maxima_fit.exponent},
                             {"residual_rms", report.maxima_fit.residual_rms}};
    j["classical_exponential_fit"] = fit_to_json(report.classical_exp_fit);
    j["classical_is_exponential"] = report.classical_is_exponential;
    j["verdict"] = report.verdict == qwalk::TransportVerdict::QuantumMoreEfficient
                       ? "quantum-more-efficient"
                       : "classical-more-efficient";
    qwalk::atomic_write_text((dir / ("fit_" + tag + ".json")).string(), j.dump(2) + "\n");
}

void ensemble_to_dir(const fs::path& dir, const std::string& prefix, qwalk::GraphModel model,
                     int n, int degree, int realizations, std::uint64_t seed) {
    qwalk::EnsembleConfig config;
    config.params.model = model;
    config.params.n = n;
    if (model == qwalk::GraphModel::Er)
        config.params.p = static_cast<double>(degree) / (n - 1);
    else
        config.params.k = degree;
    config.params.seed = seed;
    config.realizations = realizations;

    const auto result = qwalk::run_ensemble(config);
    qwalk::write_ensemble_series_csv((dir / (prefix + "_series.csv")).string(), config.grid,
                                     result.mean_pbar, result.mean_pibar);
    qwalk::write_chi_csv((dir / (prefix + "_chi.csv")).string(), result.mean_chi);
    qwalk::write_chi_hist_csv((dir / (prefix + "_chi_hist.csv")).string(),
                              qwalk::chi_distribution(result));
    auto manifest = result.manifest;
    manifest.command = "figure";
    manifest.outputs = {prefix + "_series.csv", prefix + "_chi.csv", prefix + "_chi_hist.csv"};
    qwalk::write_manifest_json((dir / (prefix + "_manifest.json")).string(), manifest);
}

int run_figure(const std::string& id, const std::string& outdir, std::uint64_t seed, int workers) {
    ensure_outdir(outdir);
    const fs::path dir(outdir);
    const int n = 100, realizations = 100;

    // fig3/fig4 show both models side by side; fig1a/fig1b one model each
    if (id == "fig3" || id == "fig4") {
        int index = 0;
        for (const int degree : {10, 20, 30}) {
            ensemble_to_dir(dir, "er_k" + std::to_string(degree), qwalk::GraphModel::Er, n, degree,
                            realizations, qwalk::derive_seed(seed, index++));
            ensemble_to_dir(dir, "config_k" + std::to_string(degree),
                            qwalk::GraphModel::Configuration, n, degree, realizations,
                            qwalk::derive_seed(seed, index++));
        }
        return 0;
    }
    if (id == "fig1a" || id == "fig1b") {
        const auto model = id == "fig1a" ? qwalk::GraphModel::Er : qwalk::GraphModel::Configuration;
        int index = 0;
        for (const int degree : {10, 20, 30}) {
            const std::string prefix =
                (model == qwalk::GraphModel::Er ? "er_k" : "config_k") + std::to_string(degree);
            ensemble_to_dir(dir, prefix, model, n, degree, realizations,
                            qwalk::derive_seed(seed, index++));
        }
        return 0;
    }
    if (id == "fig2a") {
        write_efficiency_outputs(dir, "kbar4", 4.0);
        return 0;
    }
    if (id == "fig2b") {
        write_efficiency_outputs(dir, "kbar9", 9.0);
        return 0;
    }
    if (id == "fig2c") {
        write_efficiency_outputs(dir, "kbar16", 16.0);
        write_efficiency_outputs(dir, "kbar64", 64.0);
        return 0;
    }
    if (id == "fig5a") {
        ScanArgs scan;
        scan.what = "degree";
        scan.n = n;
        scan.realizations = realizations;
        scan.seed = seed;
        scan.workers = workers;
        scan.outdir = outdir;
        return run_scan(scan);
    }
    if (id == "fig5b") {
        ScanArgs scan;
        scan.what = "size";
        scan.degree = 50;
        scan.realizations = 50;
        scan.seed = seed;
        scan.workers = workers;
        scan.outdir = outdir;
        return run_scan(scan);
    }
    if (id == "fig6") {
        ScanArgs scan;
        scan.what = "edge-removal";
        scan.n = n;
        scan.m_values = "0,25,50,75,100,125,150,175,200,300,500,1000,2000,3000,4000";
        scan.realizations = 50;
        scan.seed = seed;
        scan.workers = workers;
        scan.outdir = outdir;
        return run_scan(scan);
    }
    throw qwalk::ParamError("unknown figure id '" + id + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qwalk: classical and quantum walk dynamics on random networks"};
    app.require_subcommand(1);

    // gen
    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "generate a graph realization");
    gen_cmd->add_option("--model", gen.model, "er|config|complete-minus-m|cycle|complete")
        ->required();
    gen_cmd->add_option("--n", gen.n, "node count")->required();
    gen_cmd->add_option("--p", gen.p, "er connection probability");
    gen_cmd->add_option("--k", gen.k, "configuration model degree");
    gen_cmd->add_option("--m", gen.m, "removed edge count");
    gen_cmd->add_option("--seed", gen.seed, "rng seed");
    gen_cmd->add_flag("--require-connected", gen.require_connected, "resample until connected");
    gen_cmd->add_option("--swaps", gen.swaps, "edge-interchange proposals applied afterwards");
    gen_cmd->add_option("-o,--output", gen.output, "output edge file")->required();

    // spectrum
    std::string sp_input, sp_output, sp_vectors;
    double sp_tol = -1.0;
    auto* sp_cmd = app.add_subcommand("spectrum", "laplacian eigendecomposition");
    sp_cmd->add_option("-i,--input", sp_input)->required();
    sp_cmd->add_option("-o,--output", sp_output)->required();
    sp_cmd->add_option("--vectors", sp_vectors, "also write eigenvectors");
    sp_cmd->add_option("--tol", sp_tol, "degeneracy tolerance");

    // evolve
    std::string ev_input, ev_kind = "quantum", ev_grid = "lin", ev_output;
    double ev_tmin = 0.0, ev_tmax = 20.0;
    int ev_points = 401;
    bool ev_full = false;
    auto* ev_cmd = app.add_subcommand("evolve", "transition probabilities over a time grid");
    ev_cmd->add_option("-i,--input", ev_input)->required();
    ev_cmd->add_option("--kind", ev_kind, "classical|quantum|bound");
    ev_cmd->add_option("--grid", ev_grid, "lin|log");
    ev_cmd->add_option("--tmin", ev_tmin);
    ev_cmd->add_option("--tmax", ev_tmax);
    ev_cmd->add_option("--points", ev_points);
    ev_cmd->add_flag("--full-matrix", ev_full, "emit the full N x N matrix per time");
    ev_cmd->add_option("-o,--output", ev_output)->required();

    // longtime
    std::string lt_input, lt_output;
    double lt_tol = -1.0;
    auto* lt_cmd = app.add_subcommand("longtime", "long-time averaged transition matrix");
    lt_cmd->add_option("-i,--input", lt_input)->required();
    lt_cmd->add_option("-o,--output", lt_output)->required();
    lt_cmd->add_option("--tol", lt_tol, "degeneracy tolerance");

    // ensemble
    EnsembleArgs ens;
    auto* ens_cmd = app.add_subcommand("ensemble", "averaged observables over R realizations");
    ens_cmd->add_option("--config", ens.config_path, "run config JSON")->required();
    ens_cmd->add_option("-o,--outdir", ens.outdir)->required();
    ens_cmd->add_option("--realizations", ens.realizations, "override config");
    ens_cmd->add_option("--seed", ens.seed, "override config");
    ens_cmd->add_option("--workers", ens.workers, "override config");
    ens_cmd->add_option("--bins", ens.bins, "histogram bins");

    // scan
    ScanArgs scan;
    auto* scan_cmd = app.add_subcommand("scan", "parameter scans of the long-time average");
    scan_cmd->add_option("what", scan.what, "degree|size|edge-removal")->required();
    scan_cmd->add_option("--n", scan.n);
    scan_cmd->add_option("--degree", scan.degree);
    scan_cmd->add_option("--degrees", scan.degrees);
    scan_cmd->add_option("--sizes", scan.sizes);
    scan_cmd->add_option("--m-values", scan.m_values);
    scan_cmd->add_option("--realizations", scan.realizations);
    scan_cmd->add_option("--seed", scan.seed);
    scan_cmd->add_option("--workers", scan.workers);
    scan_cmd->add_option("-o,--outdir", scan.outdir)->required();

    // continuum
    double co_kbar = 4.0, co_tmin = 1e-2, co_tmax = 1e3;
    int co_points = 600;
    std::string co_grid = "log", co_kind = "classical", co_output;
    auto* co_cmd = app.add_subcommand("continuum", "continuum-limit return probability");
    co_cmd->add_option("--kbar", co_kbar, "average degree")->required();
    co_cmd->add_option("--grid", co_grid, "lin|log");
    co_cmd->add_option("--tmin", co_tmin);
    co_cmd->add_option("--tmax", co_tmax);
    co_cmd->add_option("--points", co_points);
    co_cmd->add_option("--kind", co_kind, "classical|amplitude");
    co_cmd->add_option("-o,--output", co_output)->required();

    // fit
    std::string fit_input, fit_window = "10:100", fit_output;
    bool fit_maxima = false;
    double fit_min_period = 0.0;
    auto* fit_cmd = app.add_subcommand("fit", "power-law fit of a series CSV");
    fit_cmd->add_option("-i,--input", fit_input)->required();
    fit_cmd->add_option("--window", fit_window, "t_lo:t_hi");
    fit_cmd->add_flag("--maxima", fit_maxima, "fit local maxima instead of raw points");
    fit_cmd->add_option("--min-period", fit_min_period, "resolution check for --maxima");
    fit_cmd->add_option("-o,--output", fit_output)->required();

    // figure
    std::string fig_id, fig_outdir;
    std::uint64_t fig_seed = 0;
    int fig_workers = 0;
    auto* fig_cmd = app.add_subcommand("figure", "plot-ready data with baked-in parameters");
    fig_cmd->add_option("--id", fig_id,
                        "fig1a|fig1b|fig2a|fig2b|fig2c|fig3|fig4|fig5a|fig5b|fig6")
        ->required();
    fig_cmd->add_option("-o,--outdir", fig_outdir)->required();
    fig_cmd->add_option("--seed", fig_seed);
    fig_cmd->add_option("--workers", fig_workers);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help / --version
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen_cmd->parsed()) return run_gen(gen);
        if (sp_cmd->parsed()) return run_spectrum(sp_input, sp_output, sp_vectors, sp_tol);
        if (ev_cmd->parsed())
            return run_evolve(ev_input, ev_kind, ev_grid, ev_tmin, ev_tmax, ev_points, ev_full,
                              ev_output);
        if (lt_cmd->parsed()) return run_longtime(lt_input, lt_output, lt_tol);
        if (ens_cmd->parsed()) return run_ensemble_cmd(ens);
        if (scan_cmd->parsed()) return run_scan(scan);
        if (co_cmd->parsed())
            return run_continuum(co_kbar, co_grid, co_tmin, co_tmax, co_points, co_kind, co_output);
        if (fit_cmd->parsed())
            return run_fit(fit_input, fit_window, fit_maxima, fit_min_period, fit_output);
        if (fig_cmd->parsed()) return run_figure(fig_id, fig_outdir, fig_seed, fig_workers);
    } catch (const qwalk::ParamError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const qwalk::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const qwalk::NumericalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const qwalk::GenerationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
