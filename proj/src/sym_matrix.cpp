#include "partitionlab/sym_matrix.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace partitionlab {

SymMatrix::SymMatrix(std::size_t n) : n_(n), e_(n * n, 0.0) {}

SymMatrix::SymMatrix(std::size_t n, std::vector<double> entries)
    : n_(n), e_(std::move(entries)) {
    if (e_.size() != n * n)
        throw std::invalid_argument("SymMatrix: expected " + std::to_string(n * n) +
                                    " entries, got " + std::to_string(e_.size()));
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            const double diff = std::fabs(e_[i * n_ + j] - e_[j * n_ + i]);
            if (!(diff <= kSymmetryTol))  // NaN from non-finite input also lands here
                throw std::invalid_argument(
                    "SymMatrix: entries (" + std::to_string(i) + "," + std::to_string(j) +
                    ") and transpose differ by more than the symmetry tolerance");
            const double mean = 0.5 * (e_[i * n_ + j] + e_[j * n_ + i]);
            e_[i * n_ + j] = e_[j * n_ + i] = mean;
        }
    }
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    const std::size_t n = rows.size();
    std::vector<double> flat;
    flat.reserve(n * n);
    for (const auto& row : rows) {
        if (row.size() != n)
            throw std::invalid_argument("SymMatrix: ragged rows, matrix must be square");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return SymMatrix(n, std::move(flat));
}

void SymMatrix::set(std::size_t i, std::size_t j, double value) {
    e_[i * n_ + j] = value;
    e_[j * n_ + i] = value;
}

double SymMatrix::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < n_; ++i) t += e_[i * n_ + i];
    return t;
}

double SymMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : e_) s += v * v;
    return std::sqrt(s);
}

double SymMatrix::inf_norm() const {
    double best = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n_; ++j) row += std::fabs(e_[i * n_ + j]);
        best = std::max(best, row);
    }
    return best;
}

bool SymMatrix::all_finite() const {
    for (double v : e_)
        if (!std::isfinite(v)) return false;
    return true;
}

std::string SymMatrix::to_text() const {
    std::vector<std::string> cells(n_ * n_);
    std::size_t width = 0;
    char buf[64];
    for (std::size_t idx = 0; idx < cells.size(); ++idx) {
        std::snprintf(buf, sizeof buf, "%.4f", e_[idx]);
        std::string s(buf);
        if (s == "-0.0000") s = "0.0000";
        width = std::max(width, s.size());
        cells[idx] = std::move(s);
    }
    std::string out;
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            const std::string& c = cells[i * n_ + j];
            if (j > 0) out += ' ';
            out.append(width - c.size(), ' ');
            out += c;
        }
        out += '\n';
    }
    return out;
}

}  // namespace partitionlab
