#pragma once

#include <compare>
#include <iosfwd>
#include <vector>

#include "partitionlab/sym_matrix.hpp"

namespace partitionlab {

// Vertices are 0-based indices inside the library; every file format and
// report speaks 1-based ids.
struct Edge {
    int u;
    int v;
    auto operator<=>(const Edge&) const = default;
};

// Undirected simple graph: no self-loops, no duplicate edges.
class Graph {
public:
    Graph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }  // canonical u < v, sorted

    bool has_edge(int u, int v) const;
    std::vector<int> degrees() const;
    std::vector<std::vector<int>> adjacency_lists() const;

private:
    int n_;
    std::vector<Edge> edges_;
};

// Strictly increasing vertex indices of a parent graph.
class VertexSubset {
public:
    VertexSubset(const Graph& parent, std::vector<int> members);
    const std::vector<int>& members() const { return members_; }

private:
    std::vector<int> members_;
};

// Vertex -> part assignment with contiguous part ids 0..k-1, all used.
class Partition {
public:
    Partition(std::vector<int> part_of, int part_count);

    int vertex_count() const { return static_cast<int>(part_of_.size()); }
    int part_count() const { return k_; }
    int part(int v) const { return part_of_[v]; }
    const std::vector<int>& part_of() const { return part_of_; }
    std::vector<std::vector<int>> groups() const;  // members per part, ascending

private:
    std::vector<int> part_of_;
    int k_;
};

// Edge-list text format: optional first line "n <count>", one edge per
// line "u v" with 1-based decimal ids, '#' comment lines and blank lines
// ignored, tokens split on ASCII whitespace.
Graph parse_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

SymMatrix adjacency_matrix(const Graph& g);
SymMatrix degree_matrix(const Graph& g);
SymMatrix laplacian(const Graph& g);  // D - A, rows sum to exactly 0

struct InducedSubgraph {
    Graph graph;
    std::vector<int> original_ids;  // new index -> parent index
};

// Relabels s to 0..|s|-1 in member order; degrees come from the induced
// edge set, never the parent.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSubset& s);

// Part ids ordered by smallest member.
Partition connected_components(const Graph& g);

// Grid graph over the given extents, vertices in row-major order; at most
// one million vertices.
Graph generate_lattice(const std::vector<int>& dims);

int cut_size(const Graph& g, const Partition& p);

}  // namespace partitionlab
