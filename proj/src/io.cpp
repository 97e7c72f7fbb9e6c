#include "partitionlab/io.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>

#if defined(_WIN32)
#include <io.h>
#define PARTITIONLAB_ISATTY _isatty
#define PARTITIONLAB_FILENO _fileno
#else
#include <unistd.h>
#define PARTITIONLAB_ISATTY isatty
#define PARTITIONLAB_FILENO fileno
#endif

namespace partitionlab {

namespace {

std::string num(double value, const char* pattern = "%.6g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, pattern, value);
    return buf;
}

std::string joined_center(const Center& c) {
    std::string out;
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (j) out += ',';
        out += num(c[j]);
    }
    return out;
}

const char* kBold = "\x1b[1m";
const char* kReset = "\x1b[0m";

}  // namespace

void write_labels_csv(std::ostream& out, const Dataset& ds, const std::vector<int>& labels) {
    if (labels.size() != ds.size())
        throw std::invalid_argument("write_labels_csv: label count does not match dataset");
    out << "id,label\n";
    for (std::size_t i = 0; i < ds.size(); ++i)
        out << ds.point(i).id << ',' << labels[i] << '\n';
}

std::vector<std::pair<std::string, int>> read_labels_csv(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool saw_header = false;
    std::vector<std::pair<std::string, int>> rows;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!saw_header) {
            if (line != "id,label")
                throw std::runtime_error("labels line " + std::to_string(lineno) +
                                         ": header must be 'id,label'");
            saw_header = true;
            continue;
        }
        const std::size_t comma = line.rfind(',');
        if (comma == std::string::npos || comma == 0)
            throw std::runtime_error("labels line " + std::to_string(lineno) +
                                     ": expected 'id,label'");
        const std::string id = line.substr(0, comma);
        const std::string tail = line.substr(comma + 1);
        int label = 0;
        auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), label);
        if (ec != std::errc{} || ptr != tail.data() + tail.size() || label < 1)
            throw std::runtime_error("labels line " + std::to_string(lineno) + ": '" + tail +
                                     "' is not a label");
        rows.emplace_back(id, label);
    }
    if (!saw_header) throw std::runtime_error("labels: missing header line");
    return rows;
}

void write_parts_csv(std::ostream& out, const Partition& p) {
    out << "vertex,part\n";
    for (int v = 0; v < p.vertex_count(); ++v) out << v + 1 << ',' << p.part(v) << '\n';
}

void write_trace_tsv(std::ostream& out, const Dataset& ds, const KMeansTrace& trace,
                     bool precise) {
    for (std::size_t it = 0; it < trace.iterations.size(); ++it) {
        const KMeansIteration& rec = trace.iterations[it];
        out << "iteration\t" << it + 1 << "\tcenters";
        for (const Center& c : rec.centers) out << '\t' << joined_center(c);
        out << '\n';
        for (std::size_t i = 0; i < ds.size(); ++i) {
            out << ds.point(i).id;
            for (double x : ds.point(i).coords) out << '\t' << num(x);
            for (double d : rec.distances[i]) {
                if (precise)
                    out << '\t' << num(d, "%.15g");
                else
                    out << '\t' << display_round(d);
            }
            out << '\t' << rec.labels[i] << '\n';
        }
        out << '\n';
    }
}

void write_spectral_report(std::ostream& out, const Graph& g, const SpectralReport& report,
                           bool ansi) {
    const char* bold = ansi ? kBold : "";
    const char* reset = ansi ? kReset : "";
    out << "graph: " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
    for (std::size_t s = 0; s < report.splits.size(); ++s) {
        const SplitRecord& rec = report.splits[s];
        out << "split " << s + 1 << ": " << rec.part.size() << " vertices, ";
        if (rec.by_components) {
            out << "disconnected, sizes";
            for (int sz : rec.child_sizes) out << ' ' << sz;
        } else {
            out << "lambda2 = " << num(rec.lambda2, "%.4f") << ", sides ";
            for (std::size_t c = 0; c < rec.child_sizes.size(); ++c) {
                if (c) out << '/';
                out << rec.child_sizes[c];
            }
        }
        out << '\n';
    }
    std::vector<std::vector<int>> groups = report.partition.groups();
    out << "parts: " << groups.size() << '\n';
    for (std::size_t p = 0; p < groups.size(); ++p) {
        out << bold << "part " << p << " (" << groups[p].size() << "):" << reset;
        for (int v : groups[p]) out << ' ' << v + 1;
        out << '\n';
    }
    out << "cut edges: " << report.cut_edges << '\n';
}

void write_kmeans_summary(std::ostream& out, const KMeansResult& result, bool ansi) {
    const char* bold = ansi ? kBold : "";
    const char* reset = ansi ? kReset : "";
    out << "iterations: " << result.trace.iterations.size() << '\n';
    out << "converged: " << (result.converged ? "yes" : "no") << '\n';
    out << bold << "final sse = " << num(result.trace.final_sse, "%.6f") << reset << '\n';
    std::vector<std::size_t> sizes(result.centers.size(), 0);
    for (int label : result.labels) ++sizes[static_cast<std::size_t>(label - 1)];
    for (std::size_t c = 0; c < result.centers.size(); ++c)
        out << "center " << c + 1 << " (" << sizes[c] << " points): " <<
            joined_center(result.centers[c]) << '\n';
}

bool ansi_enabled() {
    if (const char* mode = std::getenv("PARTITIONLAB_COLOR")) {
        const std::string m = mode;
        if (m == "never") return false;
        if (m == "always") return true;
    }
    return PARTITIONLAB_ISATTY(PARTITIONLAB_FILENO(stdout)) != 0;
}

}  // namespace partitionlab
