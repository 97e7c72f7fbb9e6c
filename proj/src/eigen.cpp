#include "partitionlab/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace partitionlab {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kConvergenceScale = 1e-12;
constexpr double kSignTol = 1e-9;

double off_diagonal_norm(const std::vector<double>& m, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) s += m[i * n + j] * m[i * n + j];
    return std::sqrt(2.0 * s);
}

void sign_normalize(std::vector<double>& v) {
    for (double x : v) {
        if (std::fabs(x) > kSignTol) {
            if (x < 0.0)
                for (double& y : v) y = -y;
            return;
        }
    }
}

}  // namespace

EigenDecomposition eigensolve(const SymMatrix& a) {
    const std::size_t n = a.size();
    if (n == 0) throw std::invalid_argument("eigensolve: empty matrix");
    if (!a.all_finite()) throw std::invalid_argument("eigensolve: non-finite entries");

    std::vector<double> b = a.data();
    std::vector<double> v(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

    const double target = kConvergenceScale * (1.0 + a.frobenius_norm());
    double off = off_diagonal_norm(b, n);
    int sweeps = 0;
    while (off > target) {
        if (sweeps++ == kMaxSweeps)
            throw std::runtime_error("eigensolve: no convergence after " +
                                     std::to_string(kMaxSweeps) +
                                     " sweeps, off-diagonal norm " + std::to_string(off));
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = b[p * n + q];
                if (apq == 0.0) continue;
                const double tau = (b[q * n + q] - b[p * n + p]) / (2.0 * apq);
                const double t = tau >= 0.0 ? 1.0 / (tau + std::hypot(1.0, tau))
                                            : 1.0 / (tau - std::hypot(1.0, tau));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                // B <- J^T B J, rotation in the (p, q) plane
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const double bkp = b[k * n + p], bkq = b[k * n + q];
                    b[k * n + p] = b[p * n + k] = c * bkp - s * bkq;
                    b[k * n + q] = b[q * n + k] = s * bkp + c * bkq;
                }
                b[p * n + p] -= t * apq;
                b[q * n + q] += t * apq;
                b[p * n + q] = b[q * n + p] = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v[k * n + p], vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
        off = off_diagonal_norm(b, n);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return b[x * n + x] < b[y * n + y];
    });

    EigenDecomposition dec;
    dec.eigenvalues.reserve(n);
    dec.eigenvectors.reserve(n);
    for (std::size_t k : order) {
        dec.eigenvalues.push_back(b[k * n + k]);
        std::vector<double> col(n);
        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            col[i] = v[i * n + k];
            norm += col[i] * col[i];
        }
        norm = std::sqrt(norm);
        for (double& x : col) x /= norm;
        dec.eigenvectors.push_back(std::move(col));
    }
    return dec;
}

std::vector<EigenPair> smallest_k(const SymMatrix& a, std::size_t k) {
    if (k < 1 || k > a.size())
        throw std::invalid_argument("smallest_k: k = " + std::to_string(k) +
                                    " out of range 1.." + std::to_string(a.size()));
    EigenDecomposition dec = eigensolve(a);
    std::vector<EigenPair> pairs;
    pairs.reserve(k);
    for (std::size_t i = 0; i < k; ++i)
        pairs.push_back({dec.eigenvalues[i], std::move(dec.eigenvectors[i])});
    return pairs;
}

double rayleigh_quotient(const SymMatrix& a, const std::vector<double>& x) {
    const std::size_t n = a.size();
    if (x.size() != n)
        throw std::invalid_argument("rayleigh_quotient: vector length " +
                                    std::to_string(x.size()) + " does not match matrix size " +
                                    std::to_string(n));
    double xtx = 0.0;
    for (double xi : x) xtx += xi * xi;
    if (xtx == 0.0) throw std::invalid_argument("rayleigh_quotient: zero vector");
    double xtax = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n; ++j) row += a(i, j) * x[j];
        xtax += x[i] * row;
    }
    return xtax / xtx;
}

FiedlerPair fiedler_pair(const SymMatrix& laplacian) {
    const std::size_t n = laplacian.size();
    if (n < 2) throw std::invalid_argument("fiedler_pair: need at least 2 vertices");
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n; ++j) row += laplacian(i, j);
        if (std::fabs(row) > 1e-9)
            throw std::invalid_argument("fiedler_pair: row " + std::to_string(i + 1) +
                                        " sums to " + std::to_string(row) +
                                        ", input is not a Laplacian");
    }
    std::vector<EigenPair> pairs = smallest_k(laplacian, 2);
    FiedlerPair f{pairs[1].value, std::move(pairs[1].vector)};
    sign_normalize(f.vector);
    return f;
}

}  // namespace partitionlab
