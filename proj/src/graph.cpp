#include "partitionlab/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>

namespace partitionlab {

namespace {

constexpr long long kLatticeCap = 1'000'000;

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\v' ||
                                   line[i] == '\f' || line[i] == '\r'))
            ++i;
        std::size_t start = i;
        while (i < line.size() && !(line[i] == ' ' || line[i] == '\t' || line[i] == '\v' ||
                                    line[i] == '\f' || line[i] == '\r'))
            ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

int parse_vertex_id(const std::string& tok, int lineno) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 1)
        throw std::runtime_error("edge list line " + std::to_string(lineno) + ": '" + tok +
                                 "' is not a vertex id (expected a decimal integer >= 1)");
    return value;
}

}  // namespace

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("Graph: negative vertex count");
    for (Edge& e : edges_) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n_)
            throw std::invalid_argument("Graph: edge endpoint out of range");
        if (e.u == e.v)
            throw std::invalid_argument("Graph: self-loop on vertex " + std::to_string(e.u + 1));
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw std::invalid_argument("Graph: duplicate edge " + std::to_string(dup->u + 1) + " " +
                                    std::to_string(dup->v + 1));
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(n_, 0);
    for (const Edge& e : edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    return deg;
}

std::vector<std::vector<int>> Graph::adjacency_lists() const {
    std::vector<std::vector<int>> adj(n_);
    for (const Edge& e : edges_) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    return adj;
}

VertexSubset::VertexSubset(const Graph& parent, std::vector<int> members)
    : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
        throw std::invalid_argument("VertexSubset: duplicate member");
    if (!members_.empty() && (members_.front() < 0 || members_.back() >= parent.vertex_count()))
        throw std::invalid_argument("VertexSubset: member outside parent graph");
}

Partition::Partition(std::vector<int> part_of, int part_count)
    : part_of_(std::move(part_of)), k_(part_count) {
    if (k_ < 0 || (part_of_.empty() != (k_ == 0)))
        throw std::invalid_argument("Partition: part count does not fit vertex count");
    std::vector<char> used(static_cast<std::size_t>(k_), 0);
    for (int p : part_of_) {
        if (p < 0 || p >= k_)
            throw std::invalid_argument("Partition: part id " + std::to_string(p) +
                                        " outside 0.." + std::to_string(k_ - 1));
        used[static_cast<std::size_t>(p)] = 1;
    }
    for (int p = 0; p < k_; ++p)
        if (!used[static_cast<std::size_t>(p)])
            throw std::invalid_argument("Partition: part id " + std::to_string(p) + " is unused");
}

std::vector<std::vector<int>> Partition::groups() const {
    std::vector<std::vector<int>> g(static_cast<std::size_t>(k_));
    for (std::size_t v = 0; v < part_of_.size(); ++v)
        g[static_cast<std::size_t>(part_of_[v])].push_back(static_cast<int>(v));
    return g;
}

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool before_first_edge = true;
    int declared_n = 0;
    bool have_header = false;
    int max_id = 0;
    std::vector<Edge> edges;
    std::set<std::pair<int, int>> seen;

    while (std::getline(in, line)) {
        ++lineno;
        std::vector<std::string> tokens = split_ws(line);
        if (tokens.empty() || tokens[0][0] == '#') continue;
        if (before_first_edge && tokens[0] == "n") {
            if (tokens.size() != 2)
                throw std::runtime_error("edge list line " + std::to_string(lineno) +
                                         ": header must be 'n <count>'");
            declared_n = parse_vertex_id(tokens[1], lineno);
            have_header = true;
            before_first_edge = false;
            continue;
        }
        before_first_edge = false;
        if (tokens.size() != 2)
            throw std::runtime_error("edge list line " + std::to_string(lineno) +
                                     ": expected 'u v'");
        int u = parse_vertex_id(tokens[0], lineno);
        int v = parse_vertex_id(tokens[1], lineno);
        if (u == v)
            throw std::runtime_error("edge list line " + std::to_string(lineno) +
                                     ": self-loop " + std::to_string(u) + " " +
                                     std::to_string(v) + " is not allowed");
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second)
            throw std::runtime_error("edge list line " + std::to_string(lineno) +
                                     ": duplicate edge " + std::to_string(u) + " " +
                                     std::to_string(v));
        if (have_header && v > declared_n)
            throw std::runtime_error("edge list line " + std::to_string(lineno) + ": vertex " +
                                     std::to_string(v) + " exceeds declared count " +
                                     std::to_string(declared_n));
        max_id = std::max(max_id, v);
        edges.push_back({u - 1, v - 1});
    }
    if (!have_header && edges.empty())
        throw std::runtime_error("edge list: no edges and no 'n <count>' header");
    return Graph(have_header ? declared_n : max_id, std::move(edges));
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "n " << g.vertex_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u + 1 << ' ' << e.v + 1 << '\n';
}

SymMatrix adjacency_matrix(const Graph& g) {
    SymMatrix a(static_cast<std::size_t>(g.vertex_count()));
    for (const Edge& e : g.edges())
        a.set(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), 1.0);
    return a;
}

SymMatrix degree_matrix(const Graph& g) {
    SymMatrix d(static_cast<std::size_t>(g.vertex_count()));
    std::vector<int> deg = g.degrees();
    for (std::size_t i = 0; i < deg.size(); ++i) d.set(i, i, static_cast<double>(deg[i]));
    return d;
}

SymMatrix laplacian(const Graph& g) {
    SymMatrix l = degree_matrix(g);
    for (const Edge& e : g.edges())
        l.set(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), -1.0);
    return l;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSubset& s) {
    const std::vector<int>& members = s.members();
    if (members.empty()) throw std::invalid_argument("induced_subgraph: empty subset");
    if (members.back() >= g.vertex_count())
        throw std::invalid_argument("induced_subgraph: subset is not from this graph");
    std::vector<int> to_new(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < members.size(); ++i)
        to_new[static_cast<std::size_t>(members[i])] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        int nu = to_new[static_cast<std::size_t>(e.u)];
        int nv = to_new[static_cast<std::size_t>(e.v)];
        if (nu >= 0 && nv >= 0) edges.push_back({nu, nv});
    }
    return {Graph(static_cast<int>(members.size()), std::move(edges)), members};
}

Partition connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> part(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> adj = g.adjacency_lists();
    std::vector<int> queue;
    int k = 0;
    for (int s = 0; s < n; ++s) {
        if (part[static_cast<std::size_t>(s)] != -1) continue;
        part[static_cast<std::size_t>(s)] = k;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (int w : adj[static_cast<std::size_t>(queue[head])])
                if (part[static_cast<std::size_t>(w)] == -1) {
                    part[static_cast<std::size_t>(w)] = k;
                    queue.push_back(w);
                }
        ++k;
    }
    return Partition(std::move(part), k);
}

Graph generate_lattice(const std::vector<int>& dims) {
    if (dims.empty()) throw std::invalid_argument("generate_lattice: no dimensions");
    long long total = 1;
    for (int d : dims) {
        if (d < 1) throw std::invalid_argument("generate_lattice: dimensions must be >= 1");
        total *= d;
        if (total > kLatticeCap)
            throw std::invalid_argument("generate_lattice: more than " +
                                        std::to_string(kLatticeCap) + " vertices");
    }
    const std::size_t m = dims.size();
    std::vector<long long> stride(m, 1);
    for (std::size_t a = m; a-- > 1;) stride[a - 1] = stride[a] * dims[a];
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < m; ++a) {
        for (long long id = 0; id < total; ++id) {
            long long coord = (id / stride[a]) % dims[a];
            if (coord + 1 < dims[a])
                edges.push_back({static_cast<int>(id), static_cast<int>(id + stride[a])});
        }
    }
    return Graph(static_cast<int>(total), std::move(edges));
}

int cut_size(const Graph& g, const Partition& p) {
    if (p.vertex_count() != g.vertex_count())
        throw std::invalid_argument("cut_size: partition covers " +
                                    std::to_string(p.vertex_count()) + " vertices, graph has " +
                                    std::to_string(g.vertex_count()));
    int cut = 0;
    for (const Edge& e : g.edges())
        if (p.part(e.u) != p.part(e.v)) ++cut;
    return cut;
}

}  // namespace partitionlab
