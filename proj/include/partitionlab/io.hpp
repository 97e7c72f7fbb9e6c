#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "partitionlab/graph.hpp"
#include "partitionlab/kmeans.hpp"
#include "partitionlab/spectral.hpp"

namespace partitionlab {

// Labels CSV: header "id,label", 1-based labels.
void write_labels_csv(std::ostream& out, const Dataset& ds, const std::vector<int>& labels);
std::vector<std::pair<std::string, int>> read_labels_csv(std::istream& in);

// Parts CSV: header "vertex,part", 1-based vertices, 0-based parts.
void write_parts_csv(std::ostream& out, const Partition& p);

// One TSV block per iteration: a centers header line, then per-record
// rows "id <coords...> <d1..dk> <label>". Distances are display-rounded
// integers unless precise is set.
void write_trace_tsv(std::ostream& out, const Dataset& ds, const KMeansTrace& trace,
                     bool precise = false);

// Human-readable run report; ANSI styling only when ansi is set.
void write_spectral_report(std::ostream& out, const Graph& g, const SpectralReport& report,
                           bool ansi = false);
void write_kmeans_summary(std::ostream& out, const KMeansResult& result, bool ansi = false);

// PARTITIONLAB_COLOR=never|always overrides; otherwise true iff stdout
// is a terminal. File outputs never go through styling.
bool ansi_enabled();

}  // namespace partitionlab
