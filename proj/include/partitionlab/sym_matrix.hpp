#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace partitionlab {

// Dense real symmetric matrix, full row-major storage.
//
// The entry constructor accepts input whose worst asymmetry
// |a(i,j) - a(j,i)| is at most kSymmetryTol and stores (A + A^T) / 2;
// anything worse (including non-finite entries) is rejected.
class SymMatrix {
public:
    static constexpr double kSymmetryTol = 1e-12;

    explicit SymMatrix(std::size_t n);                      // zero matrix
    SymMatrix(std::size_t n, std::vector<double> entries);  // row-major, n*n values
    static SymMatrix from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t size() const { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    // Writes (i, j) and (j, i); the only mutation path, so symmetry
    // cannot be broken after construction.
    void set(std::size_t i, std::size_t j, double value);

    const std::vector<double>& data() const { return e_; }

    double trace() const;
    double frobenius_norm() const;
    double inf_norm() const;  // max absolute row sum
    bool all_finite() const;

    // Fixed-width text block: one row per line, entries space separated,
    // four decimal places, right aligned.
    std::string to_text() const;

private:
    std::size_t n_;
    std::vector<double> e_;
};

}  // namespace partitionlab
