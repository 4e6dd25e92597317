#include "qwalk/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qwalk/errors.hpp"

namespace qwalk {

std::string format_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

void atomic_write_text(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc | std::ios::binary);
        if (!out) throw IoError("cannot open for writing: " + tmp.string());
        out << content;
        out.flush();
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw IoError("write failed: " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        std::error_code ignore;
        fs::remove(tmp, ignore);
        throw IoError("rename failed for " + target.string() + ": " + ec.message());
    }
}

void write_series_csv(const std::string& path, const TransitionSeries& series) {
    if (series.matrix_form()) throw ParamError("series is matrix-valued; use the matrix writer");
    std::ostringstream out;
    out << "t,value\n";
    for (size_t i = 0; i < series.grid.size(); ++i)
        out << format_double(series.grid.points[i]) << "," << format_double(series.values[i]) << "\n";
    atomic_write_text(path, out.str());
}

void write_matrix_series_csv(const std::string& path, const TransitionSeries& series) {
    if (!series.matrix_form()) throw ParamError("series is scalar; use the scalar writer");
    std::ostringstream out;
    out << "t,k,j,value\n";
    for (size_t i = 0; i < series.grid.size(); ++i) {
        const Matrix& m = series.matrices[i];
        const std::string t = format_double(series.grid.points[i]);
        for (int k = 0; k < m.n(); ++k)
            for (int j = 0; j < m.n(); ++j)
                out << t << "," << k << "," << j << "," << format_double(m(k, j)) << "\n";
    }
    atomic_write_text(path, out.str());
}

void write_ensemble_series_csv(const std::string& path, const TimeGrid& grid,
                               const std::vector<double>& mean_pbar,
                               const std::vector<double>& mean_pibar) {
    if (grid.size() != mean_pbar.size() || grid.size() != mean_pibar.size())
        throw ParamError("series length mismatch");
    std::ostringstream out;
    out << "t,mean_pbar,mean_pibar\n";
    for (size_t i = 0; i < grid.size(); ++i)
        out << format_double(grid.points[i]) << "," << format_double(mean_pbar[i]) << ","
            << format_double(mean_pibar[i]) << "\n";
    atomic_write_text(path, out.str());
}

void write_chi_csv(const std::string& path, const Matrix& chi) {
    std::ostringstream out;
    out << "k,j,chi\n";
    for (int k = 0; k < chi.n(); ++k)
        for (int j = 0; j < chi.n(); ++j)
            out << k << "," << j << "," << format_double(chi(k, j)) << "\n";
    atomic_write_text(path, out.str());
}

void write_spectrum_csv(const std::string& path, const std::vector<double>& eigenvalues) {
    std::ostringstream out;
    out << "index,eigenvalue\n";
    for (size_t i = 0; i < eigenvalues.size(); ++i)
        out << i << "," << format_double(eigenvalues[i]) << "\n";
    atomic_write_text(path, out.str());
}

void write_vectors_csv(const std::string& path, const Matrix& vectors) {
    std::ostringstream out;
    out << "# row j holds components <j|q_n> for n = 0.." << vectors.n() - 1 << "\n";
    for (int j = 0; j < vectors.n(); ++j) {
        for (int m = 0; m < vectors.n(); ++m) {
            if (m) out << ",";
            out << format_double(vectors(m, j));
        }
        out << "\n";
    }
    atomic_write_text(path, out.str());
}

void write_chi_hist_csv(const std::string& path, const ChiHistograms& hists) {
    std::ostringstream out;
    out << "kind,bin_lo,bin_hi,count\n";
    auto emit = [&](const char* kind, const Histogram& h) {
        const double width = (h.hi - h.lo) / static_cast<double>(h.counts.size());
        for (size_t b = 0; b < h.counts.size(); ++b)
            out << kind << "," << format_double(h.lo + b * width) << ","
                << format_double(h.lo + (b + 1) * width) << "," << h.counts[b] << "\n";
    };
    emit("offdiag", hists.offdiag);
    emit("diag", hists.diag);
    atomic_write_text(path, out.str());
}

namespace {

nlohmann::json params_to_json(const GraphModelParams& params) {
    nlohmann::json j;
    j["model"] = model_name(params.model);
    j["n"] = params.n;
    switch (params.model) {
        case GraphModel::Er: j["p"] = params.p; break;
        case GraphModel::Configuration: j["k"] = params.k; break;
        case GraphModel::CompleteMinusM: j["m"] = params.m; break;
        default: break;
    }
    j["seed"] = params.seed;
    j["require_connected"] = params.require_connected;
    return j;
}

nlohmann::json grid_to_json(const TimeGrid& grid) {
    nlohmann::json j;
    j["kind"] = grid.spacing == TimeGrid::Spacing::Linear ? "linear" : "log";
    j["tmin"] = grid.points.front();
    j["tmax"] = grid.points.back();
    j["points"] = grid.points.size();
    return j;
}

} // namespace

std::string manifest_to_json(const RunManifest& manifest) {
    nlohmann::json j;
    j["artifact"] = {{"name", "qwalk"}, {"version", manifest.artifact_version}};
    j["command"] = manifest.command;
    j["rng"] = {{"algorithm", manifest.rng_algorithm},
                {"version", manifest.rng_version},
                {"seed_derivation", manifest.seed_derivation}};
    j["config"] = params_to_json(manifest.params);
    j["config"]["realizations"] = manifest.realizations;
    if (!manifest.grid.points.empty()) j["config"]["grid"] = grid_to_json(manifest.grid);
    j["tolerances"] = {{"degeneracy_tol", manifest.degeneracy_tol},
                       {"jacobi_tol", manifest.jacobi_tol}};
    j["derived_seeds"] = manifest.derived_seeds;
    j["resample_counts"] = manifest.resample_counts;
    j["workers"] = manifest.workers;
    j["wall_clock_sec"] = manifest.wall_clock_sec;
    j["outputs"] = manifest.outputs;
    return j.dump(2) + "\n";
}

void write_manifest_json(const std::string& path, const RunManifest& manifest) {
    atomic_write_text(path, manifest_to_json(manifest));
}

std::vector<std::pair<double, double>> read_series_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open for reading: " + path);
    std::vector<std::pair<double, double>> points;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (first) {
            first = false; // header
            continue;
        }
        double t = 0.0, v = 0.0;
        if (std::sscanf(line.c_str(), "%lf,%lf", &t, &v) != 2)
            throw IoError("malformed series line '" + line + "' in " + path);
        points.emplace_back(t, v);
    }
    if (points.empty()) throw IoError("no data rows in " + path);
    return points;
}

} // namespace qwalk
