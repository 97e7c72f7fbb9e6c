#include <sstream>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "partitionlab/graph.hpp"
#include "oracles.hpp"

using namespace partitionlab;

namespace {

Graph paper_graph() {
    std::vector<Edge> edges;
    for (const auto& [u, v] : oracles::paper_graph_edges()) edges.push_back({u, v});
    return Graph(10, std::move(edges));
}

}  // namespace

TEST_CASE("edge list parsing with header, comments and blanks") {
    std::istringstream in("# demo\n\nn 5\n1 2\n2 3\n\n# tail comment\n4 5\n");
    Graph g = parse_edge_list(in);
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 3);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(3, 4));
    CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("edge list without header infers the max id") {
    std::istringstream in("1 2\n2 3\n");
    Graph g = parse_edge_list(in);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
}

TEST_CASE("edge list rejections carry line numbers") {
    std::istringstream self_loop("1 2\n3 3\n");
    CHECK_THROWS_WITH_AS(parse_edge_list(self_loop),
                         doctest::Contains("line 2"), std::runtime_error);
    std::istringstream dup("1 2\n2 1\n");
    CHECK_THROWS_WITH_AS(parse_edge_list(dup),
                         doctest::Contains("duplicate edge 1 2"), std::runtime_error);
    std::istringstream bad_token("1 x\n");
    CHECK_THROWS_WITH_AS(parse_edge_list(bad_token),
                         doctest::Contains("'x'"), std::runtime_error);
    std::istringstream overflow_id("n 3\n1 4\n");
    CHECK_THROWS_WITH_AS(parse_edge_list(overflow_id),
                         doctest::Contains("exceeds declared count 3"), std::runtime_error);
    std::istringstream empty("# nothing\n");
    CHECK_THROWS_AS(parse_edge_list(empty), std::runtime_error);
    std::istringstream arity("1 2 3\n");
    CHECK_THROWS_AS(parse_edge_list(arity), std::runtime_error);
}

TEST_CASE("edge list writes back in canonical form") {
    std::istringstream in("2 1\n3 1\n");
    Graph g = parse_edge_list(in);
    std::ostringstream out;
    write_edge_list(out, g);
    CHECK(out.str() == "n 3\n1 2\n1 3\n");
}

TEST_CASE("graph constructor enforces the simple-graph rules") {
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(-1, {}), std::invalid_argument);
}

TEST_CASE("matrix constructors on the worked ten-vertex graph") {
    Graph g = paper_graph();
    SymMatrix a = adjacency_matrix(g);
    SymMatrix d = degree_matrix(g);
    SymMatrix l = laplacian(g);

    const std::vector<int> expected_degrees = {2, 3, 4, 3, 3, 3, 2, 2, 4, 4};
    std::vector<int> got = g.degrees();
    CHECK(got == expected_degrees);
    for (std::size_t i = 0; i < 10; ++i) {
        CHECK(d(i, i) == expected_degrees[i]);
        CHECK(a(i, i) == 0.0);
        double row = 0.0;
        for (std::size_t j = 0; j < 10; ++j) {
            row += l(i, j);
            CHECK(l(i, j) == d(i, j) - a(i, j));
        }
        CHECK(row == 0.0);
    }
    CHECK(a(0, 7) == 1.0);
    CHECK(a(2, 9) == 1.0);
    CHECK(a(0, 3) == 0.0);
}

TEST_CASE("laplacian of a triangle") {
    Graph k3(3, {{0, 1}, {0, 2}, {1, 2}});
    SymMatrix l = laplacian(k3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(l(i, j) == (i == j ? 2.0 : -1.0));
}

TEST_CASE("induced subgraph relabels and recomputes degrees") {
    Graph g = paper_graph();
    InducedSubgraph sub = induced_subgraph(g, VertexSubset(g, {0, 1, 2, 6, 7, 8}));
    CHECK(sub.graph.vertex_count() == 6);
    CHECK(sub.graph.edge_count() == 8);
    CHECK(sub.original_ids == std::vector<int>{0, 1, 2, 6, 7, 8});
    const std::vector<int> expected = {2, 3, 3, 2, 2, 4};
    CHECK(sub.graph.degrees() == expected);
    const std::vector<Edge> expected_edges = {{0, 4}, {0, 5}, {1, 2}, {1, 3},
                                              {1, 5}, {2, 3}, {2, 5}, {4, 5}};
    CHECK(sub.graph.edges() == expected_edges);
    double row = 0.0;
    SymMatrix l = laplacian(sub.graph);
    for (std::size_t j = 0; j < 6; ++j) row += l(2, j);
    CHECK(row == 0.0);
}

TEST_CASE("induced subgraph of the full set is the graph itself") {
    Graph g = paper_graph();
    std::vector<int> all;
    for (int v = 0; v < 10; ++v) all.push_back(v);
    InducedSubgraph sub = induced_subgraph(g, VertexSubset(g, all));
    CHECK(sub.graph.edges() == g.edges());
}

TEST_CASE("vertex subset validation") {
    Graph g(3, {{0, 1}});
    CHECK_THROWS_AS(VertexSubset(g, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(VertexSubset(g, {0, 3}), std::invalid_argument);
    CHECK_THROWS_AS(induced_subgraph(g, VertexSubset(g, {})), std::invalid_argument);
}

TEST_CASE("connected components ordered by smallest member") {
    Graph g(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {3, 5}});
    Partition p = connected_components(g);
    CHECK(p.part_count() == 2);
    CHECK(p.part(0) == 0);
    CHECK(p.part(3) == 1);
    CHECK(cut_size(g, p) == 0);

    Graph single = paper_graph();
    CHECK(connected_components(single).part_count() == 1);
    CHECK(connected_components(single).part_count() ==
          oracles::component_count(10, oracles::paper_graph_edges()));

    Graph edgeless(4, {});
    CHECK(connected_components(edgeless).part_count() == 4);
}

TEST_CASE("partition validation") {
    CHECK_THROWS_AS(Partition({0, 2}, 3), std::invalid_argument);  // part 1 unused
    CHECK_THROWS_AS(Partition({0, 1}, 1), std::invalid_argument);
    CHECK_THROWS_AS(Partition({-1, 0}, 1), std::invalid_argument);
    Partition ok({1, 0, 1}, 2);
    CHECK(ok.groups() == std::vector<std::vector<int>>{{1}, {0, 2}});
}

TEST_CASE("lattice generation") {
    Graph p2 = generate_lattice({2});
    CHECK(p2.vertex_count() == 2);
    CHECK(p2.edge_count() == 1);

    Graph grid = generate_lattice({3, 3});
    CHECK(grid.vertex_count() == 9);
    CHECK(grid.edge_count() == 12);

    Graph cube = generate_lattice({2, 2, 2});
    CHECK(cube.vertex_count() == 8);
    CHECK(cube.edge_count() == 12);
    for (int v = 0; v < 8; ++v) CHECK(cube.degrees()[static_cast<std::size_t>(v)] == 3);

    Graph rect = generate_lattice({4, 7});
    CHECK(rect.edge_count() == 4 * 6 + 7 * 3);

    CHECK_THROWS_AS(generate_lattice({}), std::invalid_argument);
    CHECK_THROWS_AS(generate_lattice({0, 3}), std::invalid_argument);
    CHECK_THROWS_AS(generate_lattice({1001, 1001}), std::invalid_argument);
}

TEST_CASE("cut size counts crossing edges") {
    Graph g = paper_graph();
    std::vector<int> side(10, 0);
    for (int v : {3, 4, 5, 9}) side[static_cast<std::size_t>(v)] = 1;
    CHECK(cut_size(g, Partition(side, 2)) == 1);

    std::vector<int> singletons(10);
    for (int v = 0; v < 10; ++v) singletons[static_cast<std::size_t>(v)] = v;
    CHECK(cut_size(g, Partition(singletons, 10)) == 15);

    CHECK_THROWS_AS(cut_size(g, Partition({0, 1}, 2)), std::invalid_argument);
}
