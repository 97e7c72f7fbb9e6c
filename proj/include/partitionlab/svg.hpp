#pragma once

#include <array>
#include <string>
#include <vector>

#include "partitionlab/graph.hpp"

namespace partitionlab {

// All emission is byte-deterministic: identical input, identical output.

const std::array<const char*, 8>& svg_palette();

// 2-D scatter: one circle per point, fill keyed by its 1-based label,
// axes with min/max ticks.
std::string scatter_svg(const std::vector<std::array<double, 2>>& points,
                        const std::vector<int>& labels);

// Circular vertex layout, one line per edge, circles colored by part.
std::string graph_svg(const Graph& g, const Partition& parts);

}  // namespace partitionlab
