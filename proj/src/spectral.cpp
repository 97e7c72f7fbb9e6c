#include "partitionlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "partitionlab/eigen.hpp"

namespace partitionlab {

namespace {

std::string component_report(const Partition& comps) {
    std::vector<std::vector<int>> groups = comps.groups();
    std::string msg = std::to_string(groups.size()) + " components with sizes";
    for (const std::vector<int>& g : groups) msg += " " + std::to_string(g.size());
    return msg;
}

double median_of(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1) return values[n / 2];
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace

std::vector<int> threshold_low_side(const std::vector<double>& fiedler,
                                    const BisectConfig& cfg) {
    const double alpha = cfg.median_split ? median_of(fiedler) : cfg.alpha;
    std::vector<int> low;
    for (std::size_t i = 0; i < fiedler.size(); ++i)
        if (fiedler[i] <= alpha || std::abs(fiedler[i]) <= cfg.zero_tol)
            low.push_back(static_cast<int>(i));
    return low;
}

BisectResult bisect(const Graph& g, const BisectConfig& cfg) {
    if (g.vertex_count() < 2)
        throw std::runtime_error("bisect: need at least 2 vertices");
    Partition comps = connected_components(g);
    if (comps.part_count() != 1)
        throw std::runtime_error("bisect: graph is disconnected: " + component_report(comps));

    FiedlerPair fp = fiedler_pair(laplacian(g));
    std::vector<int> low = threshold_low_side(fp.vector, cfg);
    if (low.empty() || low.size() == static_cast<std::size_t>(g.vertex_count())) {
        const double alpha = cfg.median_split ? median_of(fp.vector) : cfg.alpha;
        throw std::runtime_error("bisect: threshold " + std::to_string(alpha) + " puts all " +
                                 std::to_string(g.vertex_count()) + " vertices on " +
                                 (low.empty() ? "the high" : "the low") + " side");
    }

    std::vector<int> part(static_cast<std::size_t>(g.vertex_count()), 1);
    for (int v : low) part[static_cast<std::size_t>(v)] = 0;
    return {Partition(std::move(part), 2), fp.lambda2};
}

SpectralReport recursive_partition(const Graph& g, const RecursionConfig& cfg) {
    if (cfg.target_parts.has_value() == cfg.lambda2_stop.has_value())
        throw std::invalid_argument(
            "recursive_partition: set exactly one of target_parts and lambda2_stop");
    if (cfg.target_parts && *cfg.target_parts < 2)
        throw std::invalid_argument("recursive_partition: target_parts must be >= 2");
    if (cfg.min_part_size < 1)
        throw std::invalid_argument("recursive_partition: min_part_size must be >= 1");
    if (g.vertex_count() < 1)
        throw std::runtime_error("recursive_partition: empty graph");
    if (cfg.target_parts && *cfg.target_parts > g.vertex_count())
        throw std::runtime_error("recursive_partition: target_parts = " +
                                 std::to_string(*cfg.target_parts) + " exceeds the " +
                                 std::to_string(g.vertex_count()) + " vertices");

    struct Piece {
        std::vector<int> members;  // ascending original vertex ids
        bool final = false;
    };
    std::vector<Piece> pieces;
    SpectralReport report{Partition(std::vector<int>(static_cast<std::size_t>(g.vertex_count()), 0), 1), {}, 0};

    // Adds a candidate part; a disconnected one is replaced by its
    // components and logged without an eigensolve.
    auto add_piece = [&](std::vector<int> members) {
        InducedSubgraph sub = induced_subgraph(g, VertexSubset(g, members));
        Partition comps = connected_components(sub.graph);
        if (comps.part_count() == 1) {
            pieces.push_back({std::move(members), false});
            return;
        }
        SplitRecord rec;
        rec.part = sub.original_ids;
        rec.lambda2 = 0.0;
        rec.by_components = true;
        for (const std::vector<int>& grp : comps.groups()) {
            std::vector<int> original;
            original.reserve(grp.size());
            for (int v : grp) original.push_back(sub.original_ids[static_cast<std::size_t>(v)]);
            rec.child_sizes.push_back(static_cast<int>(original.size()));
            pieces.push_back({std::move(original), false});
        }
        report.splits.push_back(std::move(rec));
    };

    {
        std::vector<int> all(static_cast<std::size_t>(g.vertex_count()));
        for (std::size_t v = 0; v < all.size(); ++v) all[v] = static_cast<int>(v);
        add_piece(std::move(all));
    }

    const std::size_t splittable_floor = 2 * static_cast<std::size_t>(cfg.min_part_size);
    while (true) {
        if (cfg.target_parts && pieces.size() >= static_cast<std::size_t>(*cfg.target_parts))
            break;
        std::size_t pick = pieces.size();
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            if (pieces[i].final || pieces[i].members.size() < splittable_floor) continue;
            if (pick == pieces.size() ||
                pieces[i].members.size() > pieces[pick].members.size() ||
                (pieces[i].members.size() == pieces[pick].members.size() &&
                 pieces[i].members.front() < pieces[pick].members.front()))
                pick = i;
        }
        if (pick == pieces.size()) break;

        InducedSubgraph sub = induced_subgraph(g, VertexSubset(g, pieces[pick].members));
        BisectResult bs = bisect(sub.graph, cfg.split);
        if (cfg.lambda2_stop && bs.lambda2 > *cfg.lambda2_stop) {
            pieces[pick].final = true;
            continue;
        }
        SplitRecord rec;
        rec.part = sub.original_ids;
        rec.lambda2 = bs.lambda2;
        std::vector<std::vector<int>> halves = bs.partition.groups();
        pieces.erase(pieces.begin() + static_cast<std::ptrdiff_t>(pick));
        for (const std::vector<int>& grp : halves) {
            std::vector<int> original;
            original.reserve(grp.size());
            for (int v : grp) original.push_back(sub.original_ids[static_cast<std::size_t>(v)]);
            rec.child_sizes.push_back(static_cast<int>(original.size()));
            add_piece(std::move(original));
        }
        report.splits.push_back(std::move(rec));
    }

    // Part ids in order of each part's smallest vertex.
    std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
        return a.members.front() < b.members.front();
    });
    std::vector<int> part(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t p = 0; p < pieces.size(); ++p)
        for (int v : pieces[p].members) part[static_cast<std::size_t>(v)] = static_cast<int>(p);
    report.partition = Partition(std::move(part), static_cast<int>(pieces.size()));
    report.cut_edges = cut_size(g, report.partition);
    return report;
}

}  // namespace partitionlab
