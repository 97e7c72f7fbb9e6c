#include <array>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <doctest.h>

#include "partitionlab/io.hpp"
#include "partitionlab/svg.hpp"

using namespace partitionlab;

namespace {

std::size_t count_of(const std::string& haystack, const std::string& needle) {
    std::size_t count = 0;
    for (std::size_t pos = haystack.find(needle); pos != std::string::npos;
         pos = haystack.find(needle, pos + needle.size()))
        ++count;
    return count;
}

}  // namespace

TEST_CASE("labels csv round trip") {
    Dataset ds({{"r1", {1, 2}}, {"r2", {3, 4}}, {"odd,id", {5, 6}}});
    std::ostringstream out;
    write_labels_csv(out, ds, {2, 1, 2});
    CHECK(out.str() == "id,label\nr1,2\nr2,1\nodd,id,2\n");

    std::istringstream in(out.str());
    std::vector<std::pair<std::string, int>> rows = read_labels_csv(in);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == std::pair<std::string, int>{"r1", 2});
    CHECK(rows[2] == std::pair<std::string, int>{"odd,id", 2});

    std::istringstream bad("id,label\nr1,zero\n");
    CHECK_THROWS_AS(read_labels_csv(bad), std::runtime_error);
    std::istringstream wrong_header("label,id\n");
    CHECK_THROWS_AS(read_labels_csv(wrong_header), std::runtime_error);
}

TEST_CASE("parts csv is one-based vertices, zero-based parts") {
    std::ostringstream out;
    write_parts_csv(out, Partition({1, 0, 1}, 2));
    CHECK(out.str() == "vertex,part\n1,1\n2,0\n3,1\n");
}

TEST_CASE("trace tsv blocks") {
    Dataset ds({{"a", {0, 0}}, {"b", {3, 4}}});
    KMeansConfig cfg;
    cfg.k = 2;
    cfg.centers = {{0, 0}, {3, 4}};
    KMeansResult r = lloyd(ds, cfg);
    REQUIRE(r.trace.iterations.size() == 1);

    std::ostringstream out;
    write_trace_tsv(out, ds, r.trace);
    CHECK(out.str() ==
          "iteration\t1\tcenters\t0,0\t3,4\n"
          "a\t0\t0\t0\t5\t1\n"
          "b\t3\t4\t5\t0\t2\n"
          "\n");
}

TEST_CASE("trace tsv rounds displayed distances, precise mode does not") {
    Dataset ds({{"a", {1, 0}}});
    KMeansConfig cfg;
    cfg.k = 1;
    cfg.centers = {{0, 0.5}};  // distance sqrt(1.25) = 1.118 -> displays 1
    KMeansResult r = lloyd(ds, cfg);
    std::ostringstream out;
    write_trace_tsv(out, ds, r.trace);
    CHECK(out.str().find("a\t1\t0\t1\t1\n") != std::string::npos);

    std::ostringstream precise;
    write_trace_tsv(precise, ds, r.trace, true);
    CHECK(precise.str().find("1.1180339887498") != std::string::npos);
}

TEST_CASE("spectral report text") {
    Graph g(4, {{0, 1}, {1, 2}, {2, 3}});
    RecursionConfig cfg;
    cfg.target_parts = 2;
    cfg.min_part_size = 1;
    SpectralReport report = recursive_partition(g, cfg);
    std::ostringstream out;
    write_spectral_report(out, g, report, false);
    const std::string text = out.str();
    CHECK(text.find("graph: 4 vertices, 3 edges") != std::string::npos);
    CHECK(text.find("lambda2 = 0.5858") != std::string::npos);
    CHECK(text.find("sides 2/2") != std::string::npos);
    CHECK(text.find("parts: 2") != std::string::npos);
    CHECK(text.find("cut edges: 1") != std::string::npos);
    CHECK(text.find("\x1b[") == std::string::npos);

    std::ostringstream colored;
    write_spectral_report(colored, g, report, true);
    CHECK(colored.str().find("\x1b[1m") != std::string::npos);
}

TEST_CASE("kmeans summary text") {
    Dataset ds({{"a", {0, 0}}, {"b", {2, 0}}});
    KMeansConfig cfg;
    cfg.k = 1;
    cfg.centers = {{1, 0}};
    KMeansResult r = lloyd(ds, cfg);
    std::ostringstream out;
    write_kmeans_summary(out, r, false);
    CHECK(out.str().find("converged: yes") != std::string::npos);
    CHECK(out.str().find("final sse = 2.000000") != std::string::npos);
    CHECK(out.str().find("center 1 (2 points): 1,0") != std::string::npos);
}

TEST_CASE("color env overrides detection") {
    setenv("PARTITIONLAB_COLOR", "always", 1);
    CHECK(ansi_enabled());
    setenv("PARTITIONLAB_COLOR", "never", 1);
    CHECK_FALSE(ansi_enabled());
    unsetenv("PARTITIONLAB_COLOR");
}

TEST_CASE("scatter svg structure") {
    std::vector<std::array<double, 2>> pts = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    std::string svg = scatter_svg(pts, {1, 1, 2, 3});
    CHECK(count_of(svg, "<circle") == 4);
    CHECK(count_of(svg, svg_palette()[0]) == 2);
    CHECK(count_of(svg, svg_palette()[1]) == 1);
    CHECK(count_of(svg, svg_palette()[2]) == 1);
    CHECK(svg.find("<svg ") == 0);
    CHECK(svg.rfind("</svg>\n") == svg.size() - 7);
    CHECK(svg == scatter_svg(pts, {1, 1, 2, 3}));

    CHECK_THROWS_AS(scatter_svg({}, {}), std::invalid_argument);
    CHECK_THROWS_AS(scatter_svg(pts, {1}), std::invalid_argument);
}

TEST_CASE("scatter svg survives a degenerate bounding box") {
    std::vector<std::array<double, 2>> pts = {{5, 5}, {5, 5}};
    std::string svg = scatter_svg(pts, {1, 2});
    CHECK(count_of(svg, "<circle") == 2);
    CHECK(svg.find("nan") == std::string::npos);
}

TEST_CASE("graph svg structure") {
    Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    std::string svg = graph_svg(g, Partition({0, 0, 1, 1, 0}, 2));
    CHECK(count_of(svg, "<circle") == 5);
    CHECK(count_of(svg, "<line") == 5);
    CHECK(count_of(svg, svg_palette()[0]) == 3);
    CHECK(count_of(svg, svg_palette()[1]) == 2);
    CHECK(svg == graph_svg(g, Partition({0, 0, 1, 1, 0}, 2)));
    CHECK_THROWS_AS(graph_svg(g, Partition({0, 1}, 2)), std::invalid_argument);
}
