#pragma once

#include <vector>

#include "lambda2/graph.hpp"
#include "lambda2/polynomial.hpp"

namespace lambda2 {

/// Real eigenvalues sorted in descending order, with the tolerance the
/// eigensolver ran at.
struct Spectrum {
    std::vector<double> values;
    double tol;
};

/// Cyclic Jacobi sweeps until the off-diagonal Frobenius norm drops below
/// tol. Input must be symmetric (row-major n*n).
Spectrum jacobi_eigenvalues(const std::vector<double>& m, int n, double tol = 1e-12);
Spectrum spectrum_of(const DistanceMatrix& d, double tol = 1e-12);
Spectrum spectrum_of(const IntMatrix& m, double tol = 1e-12);

/// Second largest distance eigenvalue (floating path); requires n >= 2.
double lambda2(const Graph& g);

IntMatrix distance_matrix_exact(const Graph& g);

/// Exact decision of lambda2(g) < -1/2: the squarefree part of the
/// characteristic polynomial of D(g) must not vanish at -1/2 and must have
/// exactly one distinct root above it (lambda1 is simple since D is
/// nonnegative and irreducible). No floating arithmetic.
bool decide_lambda2_lt_neg_half_exact(const Graph& g);

using Partition = std::vector<std::vector<int>>;

struct NotEquitable : Error {
    NotEquitable(std::string msg, int vertex, int part)
        : Error(std::move(msg)), vertex(vertex), part(part) {}
    int vertex;
    int part;
};

/// d(v, V_j) constant within every class V_i.
bool is_distance_equitable(const Graph& g, const Partition& partition);

struct DivisorMatrix {
    IntMatrix matrix;
    Partition partition;
};

/// Matrix of the class distance sums b_ij = d(v, V_j), v in V_i. Throws
/// NotEquitable naming the violating vertex and class.
DivisorMatrix divisor_matrix(const Graph& g, const Partition& partition);

/// charpoly(divisor matrix) divides charpoly(D) exactly, and the divisor's
/// largest root is lambda1 within 1e-8.
bool check_divisor_divides(const Graph& g, const Partition& partition);

/// Cauchy interlacing: outer_i >= inner_i >= outer_{n-m+i} within slack.
bool interlacing_holds(const Spectrum& outer, const Spectrum& inner, double slack = 1e-8);

struct TwinBound {
    long long eigenvalue;
    int multiplicity;
};

/// Eigenvalue multiplicity lower bounds from twin structure: each class of
/// r >= 2 true twins contributes (-1, r-1); m >= 2 equal-size twin cliques
/// with a common outside neighborhood contribute (-(r+1), m-1), false-twin
/// classes likewise for r = 1. Merged per eigenvalue, descending.
std::vector<TwinBound> twin_multiplicity_bounds(const Graph& g);

}  // namespace lambda2
