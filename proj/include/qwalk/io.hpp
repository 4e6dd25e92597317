#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qwalk/ensemble.hpp"
#include "qwalk/transport.hpp"

namespace qwalk {

/// Shortest decimal digits that round-trip a 64-bit float exactly.
std::string format_double(double value);

/// Writes via a temp file in the same directory plus rename, so readers never
/// observe a partial file and interrupted runs leave no output.
void atomic_write_text(const std::string& path, const std::string& content);

void write_series_csv(const std::string& path, const TransitionSeries& series);        // t,value
void write_matrix_series_csv(const std::string& path, const TransitionSeries& series); // t,k,j,value
void write_ensemble_series_csv(const std::string& path, const TimeGrid& grid,
                               const std::vector<double>& mean_pbar,
                               const std::vector<double>& mean_pibar); // t,mean_pbar,mean_pibar
void write_chi_csv(const std::string& path, const Matrix& chi);       // k,j,chi
void write_spectrum_csv(const std::string& path, const std::vector<double>& eigenvalues);
void write_vectors_csv(const std::string& path, const Matrix& vectors); // row j: <j|q_0..q_{N-1}>
void write_chi_hist_csv(const std::string& path, const ChiHistograms& hists);

std::string manifest_to_json(const RunManifest& manifest);
void write_manifest_json(const std::string& path, const RunManifest& manifest);

/// Reads a two-column scalar series ("t,value" with one header line).
std::vector<std::pair<double, double>> read_series_csv(const std::string& path);

} // namespace qwalk
