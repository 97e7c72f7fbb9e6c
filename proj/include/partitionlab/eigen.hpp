#pragma once

#include <cstddef>
#include <vector>

#include "partitionlab/sym_matrix.hpp"

namespace partitionlab {

struct EigenDecomposition {
    std::vector<double> eigenvalues;                // ascending, ties adjacent
    std::vector<std::vector<double>> eigenvectors;  // eigenvectors[k] pairs with eigenvalues[k], unit length
};

struct EigenPair {
    double value;
    std::vector<double> vector;
};

// Second-smallest eigenpair of a graph Laplacian. The vector is
// sign-normalized: the lowest-index entry with magnitude above 1e-9
// is positive.
struct FiedlerPair {
    double lambda2;
    std::vector<double> vector;
};

// Full spectrum of a symmetric matrix via cyclic Jacobi rotation sweeps.
// Converged once the off-diagonal Frobenius norm drops below
// 1e-12 * (1 + ||A||_F); at most 100 sweeps, else an error reporting the
// residual. Deterministic: identical input gives identical output.
EigenDecomposition eigensolve(const SymMatrix& a);

// The k algebraically smallest eigenpairs, ascending. 1 <= k <= n.
std::vector<EigenPair> smallest_k(const SymMatrix& a, std::size_t k);

// (x^T A x) / (x^T x); rejects the zero vector.
double rayleigh_quotient(const SymMatrix& a, const std::vector<double>& x);

// Requires row sums within 1e-9 of zero and n >= 2; callers holding raw
// symmetric matrices should use smallest_k instead.
FiedlerPair fiedler_pair(const SymMatrix& laplacian);

}  // namespace partitionlab
