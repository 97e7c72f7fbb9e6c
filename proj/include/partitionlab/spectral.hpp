#pragma once

#include <optional>
#include <vector>

#include "partitionlab/graph.hpp"

namespace partitionlab {

struct BisectConfig {
    double alpha = 0.0;         // split threshold on Fiedler-vector entries
    double zero_tol = 1e-9;     // entries this small count as zero and fall on the low side
    bool median_split = false;  // ignore alpha, split at the median entry
};

struct BisectResult {
    Partition partition;  // part 0 is the low side (entries at or below the threshold)
    double lambda2;
};

// Fiedler bisection of a connected graph: part 0 collects entries at or
// below the threshold. Rejects disconnected input with a component
// report; rejects thresholds that leave a side empty.
BisectResult bisect(const Graph& g, const BisectConfig& cfg = {});

// Indices whose Fiedler entry lands on the low side of the threshold.
std::vector<int> threshold_low_side(const std::vector<double>& fiedler,
                                    const BisectConfig& cfg);

struct RecursionConfig {
    std::optional<int> target_parts;     // exactly one of target_parts (2..n) and
    std::optional<double> lambda2_stop;  // lambda2_stop must be set
    int min_part_size = 2;               // parts below 2*min_part_size are final
    BisectConfig split;
};

struct SplitRecord {
    std::vector<int> part;  // vertices that were split, ascending
    double lambda2;         // 0 when the part fell apart into components
    std::vector<int> child_sizes;
    bool by_components = false;
};

struct SpectralReport {
    Partition partition;  // part ids ordered by smallest member
    std::vector<SplitRecord> splits;
    int cut_edges = 0;
};

// Repeated bisection, always taking the largest splittable part (ties go
// to the part holding the smallest vertex). Disconnected parts are first
// replaced by their components without an eigensolve.
SpectralReport recursive_partition(const Graph& g, const RecursionConfig& cfg);

}  // namespace partitionlab
