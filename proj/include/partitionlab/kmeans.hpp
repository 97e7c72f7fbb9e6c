#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace partitionlab {

struct Point {
    std::string id;
    std::vector<double> coords;
};

// Non-empty list of points with uniform dimension and unique ids.
class Dataset {
public:
    explicit Dataset(std::vector<Point> points);

    // CSV with header "id,<col1>,<col2>,..."; one record per line.
    static Dataset parse_csv(std::istream& in);

    std::size_t size() const { return points_.size(); }
    std::size_t dimension() const { return dim_; }
    const Point& point(std::size_t i) const { return points_[i]; }
    const std::vector<Point>& points() const { return points_; }

private:
    std::vector<Point> points_;
    std::size_t dim_;
};

using Center = std::vector<double>;

double euclidean_distance(const std::vector<double>& x, const std::vector<double>& y);

// Display rule for trace tables: round half away from zero. Internal
// arithmetic is always full precision.
long long display_round(double d);

struct Assignment {
    std::vector<int> labels;                     // 1-based cluster labels
    std::vector<std::vector<double>> distances;  // full precision, points x centers
};

// Nearest-center assignment; an exact distance tie goes to the higher
// center index.
Assignment assign_points(const Dataset& ds, const std::vector<Center>& centers);

// Coordinate-wise means; a cluster with no members keeps its previous
// center.
std::vector<Center> update_means(const Dataset& ds, const std::vector<int>& labels,
                                 std::size_t k, const std::vector<Center>& previous);

// Sum of squared distances from each point to its assigned center.
double sse(const Dataset& ds, const std::vector<int>& labels,
           const std::vector<Center>& centers);

struct KMeansConfig {
    std::size_t k = 0;
    std::vector<Center> centers;        // explicit initial centers; empty -> sample k points by seed
    std::optional<std::uint64_t> seed;  // required when centers is empty
    std::size_t max_iterations = 100;
    double mean_tolerance = 1e-12;
};

struct KMeansIteration {
    std::vector<Center> centers;                 // centers this assignment used
    std::vector<std::vector<double>> distances;  // full precision
    std::vector<int> labels;
    double sse_after_assign = 0.0;
    double sse_after_update = 0.0;
};

struct KMeansTrace {
    std::vector<KMeansIteration> iterations;
    double final_sse = 0.0;
};

struct KMeansResult {
    std::vector<int> labels;
    std::vector<Center> centers;
    KMeansTrace trace;
    bool converged = false;
};

// Lloyd iteration: assign, then update means, until labels repeat, every
// center moves at most mean_tolerance, or the iteration cap.
KMeansResult lloyd(const Dataset& ds, const KMeansConfig& cfg);

}  // namespace partitionlab
