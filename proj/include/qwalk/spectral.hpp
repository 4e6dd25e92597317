#pragma once

#include <vector>

#include "qwalk/graph.hpp"
#include "qwalk/matrix.hpp"

namespace qwalk {

/// Laplacian of g: diagonal holds node degrees, entry (i,j) is -1 for each
/// edge, 0 otherwise. Also the walk Hamiltonian (unit coupling).
Matrix laplacian(const Graph& g);

/// Full symmetric eigendecomposition. Eigenvalues ascending; vectors(m, j) is
/// component j of the m-th orthonormal eigenvector. degeneracy_classes
/// partitions eigenvalue indices into clusters of numerically equal values.
struct Spectrum {
    std::vector<double> eigenvalues;
    Matrix vectors;
    std::vector<std::vector<int>> degeneracy_classes;
    double degeneracy_tol = 0.0;

    int n() const { return static_cast<int>(eigenvalues.size()); }
};

struct EigenOptions {
    int max_sweeps = 100;
    double convergence_tol = 1e-12; // off-diagonal Frobenius norm relative to ||A||_F
    double degeneracy_tol = -1.0;   // negative selects 1e-8 * max(1, E_max)
};

/// Cyclic Jacobi rotations on a symmetric matrix. Deterministic: fixed sweep
/// order, ascending sort with stable tie-break, first significant component
/// of each eigenvector made positive. Throws NumericalError if max_sweeps
/// is reached before convergence.
Spectrum eigendecompose(const Matrix& a, const EigenOptions& options = {});

/// Eigenvalues alone, ascending. Householder tridiagonalization plus
/// implicit-shift QL: no vector accumulation, much faster than full Jacobi
/// for large matrices. Cross-checked against eigendecompose in the tests.
std::vector<double> eigenvalues_only(const Matrix& a);

/// Greedy chaining over ascending eigenvalues: adjacent values join a class
/// when their gap is below tol.
std::vector<std::vector<int>> cluster_degeneracies(const std::vector<double>& ascending, double tol);

double default_degeneracy_tol(const std::vector<double>& ascending);

} // namespace qwalk
