#include "partitionlab/kmeans.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>

namespace partitionlab {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    for (std::string& f : fields) {
        std::size_t b = f.find_first_not_of(" \t\r");
        std::size_t e = f.find_last_not_of(" \t\r");
        f = b == std::string::npos ? std::string() : f.substr(b, e - b + 1);
    }
    return fields;
}

double parse_coord(const std::string& tok, int lineno) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || !std::isfinite(value))
        throw std::runtime_error("dataset line " + std::to_string(lineno) + ": '" + tok +
                                 "' is not a finite number");
    return value;
}

// Uniform draw from [0, bound) that behaves the same on every platform,
// unlike std::uniform_int_distribution.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw >= limit);
    return draw % bound;
}

}  // namespace

Dataset::Dataset(std::vector<Point> points) : points_(std::move(points)), dim_(0) {
    if (points_.empty()) throw std::invalid_argument("Dataset: no points");
    dim_ = points_[0].coords.size();
    if (dim_ == 0) throw std::invalid_argument("Dataset: points need at least one coordinate");
    std::set<std::string> ids;
    for (const Point& p : points_) {
        if (p.coords.size() != dim_)
            throw std::invalid_argument("Dataset: point '" + p.id + "' has " +
                                        std::to_string(p.coords.size()) +
                                        " coordinates, expected " + std::to_string(dim_));
        if (!ids.insert(p.id).second)
            throw std::invalid_argument("Dataset: duplicate id '" + p.id + "'");
    }
}

Dataset Dataset::parse_csv(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool saw_header = false;
    std::size_t columns = 0;
    std::vector<Point> points;
    while (std::getline(in, line)) {
        ++lineno;
        if (lineno == 1 && line.size() >= 3 && line[0] == '\xef' && line[1] == '\xbb' &&
            line[2] == '\xbf')
            line.erase(0, 3);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        std::vector<std::string> fields = split_csv(line);
        if (!saw_header) {
            if (fields.size() < 2 || fields[0] != "id")
                throw std::runtime_error("dataset line " + std::to_string(lineno) +
                                         ": header must start with 'id' and name at least one "
                                         "coordinate column");
            columns = fields.size();
            saw_header = true;
            continue;
        }
        if (fields.size() != columns)
            throw std::runtime_error("dataset line " + std::to_string(lineno) + ": expected " +
                                     std::to_string(columns) + " fields, found " +
                                     std::to_string(fields.size()));
        if (fields[0].empty())
            throw std::runtime_error("dataset line " + std::to_string(lineno) + ": empty id");
        Point p;
        p.id = fields[0];
        for (std::size_t j = 1; j < fields.size(); ++j)
            p.coords.push_back(parse_coord(fields[j], lineno));
        points.push_back(std::move(p));
    }
    if (!saw_header) throw std::runtime_error("dataset: missing header line");
    if (points.empty()) throw std::runtime_error("dataset: no records after the header");
    return Dataset(std::move(points));
}

double euclidean_distance(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("euclidean_distance: dimension mismatch");
    double sq = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - y[i];
        sq += d * d;
    }
    return std::sqrt(sq);
}

long long display_round(double d) { return std::llround(d); }

Assignment assign_points(const Dataset& ds, const std::vector<Center>& centers) {
    if (centers.empty()) throw std::invalid_argument("assign_points: no centers");
    Assignment out;
    out.labels.resize(ds.size());
    out.distances.assign(ds.size(), std::vector<double>(centers.size()));
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const std::vector<double>& x = ds.point(i).coords;
        double best_sq = 0.0;
        std::size_t best = 0;
        for (std::size_t c = 0; c < centers.size(); ++c) {
            if (centers[c].size() != x.size())
                throw std::invalid_argument("assign_points: center " + std::to_string(c + 1) +
                                            " has dimension " +
                                            std::to_string(centers[c].size()) + ", points have " +
                                            std::to_string(x.size()));
            double sq = 0.0;
            for (std::size_t j = 0; j < x.size(); ++j) {
                const double d = x[j] - centers[c][j];
                sq += d * d;
            }
            out.distances[i][c] = std::sqrt(sq);
            if (c == 0 || sq <= best_sq) {
                best_sq = sq;
                best = c;
            }
        }
        out.labels[i] = static_cast<int>(best) + 1;
    }
    return out;
}

std::vector<Center> update_means(const Dataset& ds, const std::vector<int>& labels,
                                 std::size_t k, const std::vector<Center>& previous) {
    if (labels.size() != ds.size())
        throw std::invalid_argument("update_means: label count does not match dataset");
    if (previous.size() != k)
        throw std::invalid_argument("update_means: previous centers do not match k");
    std::vector<Center> sums(k, Center(ds.dimension(), 0.0));
    std::vector<std::size_t> counts(k, 0);
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const int label = labels[i];
        if (label < 1 || static_cast<std::size_t>(label) > k)
            throw std::invalid_argument("update_means: label " + std::to_string(label) +
                                        " outside 1.." + std::to_string(k));
        const std::size_t c = static_cast<std::size_t>(label - 1);
        ++counts[c];
        for (std::size_t j = 0; j < ds.dimension(); ++j)
            sums[c][j] += ds.point(i).coords[j];
    }
    std::vector<Center> next(k);
    for (std::size_t c = 0; c < k; ++c) {
        if (counts[c] == 0) {
            next[c] = previous[c];
            continue;
        }
        next[c].resize(ds.dimension());
        for (std::size_t j = 0; j < ds.dimension(); ++j)
            next[c][j] = sums[c][j] / static_cast<double>(counts[c]);
    }
    return next;
}

double sse(const Dataset& ds, const std::vector<int>& labels,
           const std::vector<Center>& centers) {
    if (labels.size() != ds.size())
        throw std::invalid_argument("sse: label count does not match dataset");
    double total = 0.0;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const int label = labels[i];
        if (label < 1 || static_cast<std::size_t>(label) > centers.size())
            throw std::invalid_argument("sse: label " + std::to_string(label) + " outside 1.." +
                                        std::to_string(centers.size()));
        const std::vector<double>& x = ds.point(i).coords;
        const Center& c = centers[static_cast<std::size_t>(label - 1)];
        for (std::size_t j = 0; j < x.size(); ++j) {
            const double d = x[j] - c[j];
            total += d * d;
        }
    }
    return total;
}

KMeansResult lloyd(const Dataset& ds, const KMeansConfig& cfg) {
    if (cfg.k == 0) throw std::invalid_argument("lloyd: k must be at least 1");
    if (cfg.k > ds.size())
        throw std::runtime_error("lloyd: k = " + std::to_string(cfg.k) + " exceeds the " +
                                 std::to_string(ds.size()) + " points available");

    std::vector<Center> centers = cfg.centers;
    if (centers.empty()) {
        if (!cfg.seed)
            throw std::invalid_argument("lloyd: seeded start requires a seed");
        // Partial Fisher-Yates over point indices: the first k slots become
        // the sample, in draw order.
        std::mt19937_64 rng(*cfg.seed);
        std::vector<std::size_t> idx(ds.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        for (std::size_t i = 0; i < cfg.k; ++i) {
            const std::size_t j = i + bounded(rng, idx.size() - i);
            std::swap(idx[i], idx[j]);
            centers.push_back(ds.point(idx[i]).coords);
        }
    } else {
        if (centers.size() != cfg.k)
            throw std::runtime_error("lloyd: " + std::to_string(centers.size()) +
                                     " centers given, k = " + std::to_string(cfg.k));
        for (std::size_t c = 0; c < centers.size(); ++c)
            if (centers[c].size() != ds.dimension())
                throw std::runtime_error("lloyd: center " + std::to_string(c + 1) +
                                         " has dimension " + std::to_string(centers[c].size()) +
                                         ", dataset has " + std::to_string(ds.dimension()));
    }

    KMeansResult result;
    std::vector<int> prev_labels;
    for (std::size_t iter = 0; iter < cfg.max_iterations; ++iter) {
        Assignment assign = assign_points(ds, centers);
        KMeansIteration rec;
        rec.centers = centers;
        rec.distances = std::move(assign.distances);
        rec.labels = assign.labels;
        rec.sse_after_assign = sse(ds, assign.labels, centers);
        rec.sse_after_update = rec.sse_after_assign;
        result.trace.iterations.push_back(std::move(rec));

        if (!prev_labels.empty() && assign.labels == prev_labels) {
            result.labels = assign.labels;
            result.centers = centers;
            result.converged = true;
            break;
        }
        prev_labels = assign.labels;

        std::vector<Center> next = update_means(ds, assign.labels, cfg.k, centers);
        double max_move = 0.0;
        for (std::size_t c = 0; c < cfg.k; ++c)
            max_move = std::max(max_move, euclidean_distance(next[c], centers[c]));
        result.trace.iterations.back().sse_after_update = sse(ds, assign.labels, next);
        centers = std::move(next);
        result.labels = assign.labels;
        result.centers = centers;
        if (max_move <= cfg.mean_tolerance) {
            result.converged = true;
            break;
        }
    }
    result.trace.final_sse = sse(ds, result.labels, result.centers);
    return result;
}

}  // namespace partitionlab
