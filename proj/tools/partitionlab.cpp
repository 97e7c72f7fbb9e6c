#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "partitionlab/eigen.hpp"
#include "partitionlab/graph.hpp"
#include "partitionlab/io.hpp"
#include "partitionlab/kmeans.hpp"
#include "partitionlab/spectral.hpp"
#include "partitionlab/svg.hpp"

namespace {

using namespace partitionlab;

// Post-parse flag inconsistencies; mapped to exit 2 like CLI11 errors.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double parse_double_token(const std::string& tok, const std::string& what) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || !std::isfinite(value))
        throw UsageError(what + ": '" + tok + "' is not a finite number");
    return value;
}

std::vector<std::string> split_on(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

// Grammar: "x1,y1;x2,y2;..." with one ';' group per center.
std::vector<Center> parse_centers_string(const std::string& text) {
    std::vector<Center> centers;
    for (const std::string& group : split_on(text, ';')) {
        if (group.empty()) throw UsageError("--centers: empty center in '" + text + "'");
        Center c;
        for (const std::string& field : split_on(group, ','))
            c.push_back(parse_double_token(field, "--centers"));
        centers.push_back(std::move(c));
    }
    return centers;
}

std::vector<Center> parse_centers_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open centers file '" + path + "'");
    std::vector<Center> centers;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        Center c;
        for (const std::string& field : split_on(line, ',')) {
            double value = 0.0;
            auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
            if (ec != std::errc{} || ptr != field.data() + field.size() || !std::isfinite(value))
                throw std::runtime_error("centers file line " + std::to_string(lineno) + ": '" +
                                         field + "' is not a finite number");
            c.push_back(value);
        }
        centers.push_back(std::move(c));
    }
    if (centers.empty()) throw std::runtime_error("centers file '" + path + "' has no centers");
    return centers;
}

Dataset load_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input '" + path + "'");
    return Dataset::parse_csv(in);
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge list '" + path + "'");
    return parse_edge_list(in);
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    return out;
}

std::array<std::size_t, 2> scatter_columns(const Dataset& ds, const std::string& dims_flag) {
    if (dims_flag.empty()) {
        if (ds.dimension() != 2)
            throw std::runtime_error("scatter plot needs 2-D data, this dataset has " +
                                     std::to_string(ds.dimension()) +
                                     " columns; pick two with --dims i,j");
        return {0, 1};
    }
    std::vector<std::string> fields = split_on(dims_flag, ',');
    if (fields.size() != 2) throw UsageError("--dims: expected 'i,j'");
    std::array<std::size_t, 2> cols{};
    for (std::size_t a = 0; a < 2; ++a) {
        int idx = 0;
        auto [ptr, ec] =
            std::from_chars(fields[a].data(), fields[a].data() + fields[a].size(), idx);
        if (ec != std::errc{} || ptr != fields[a].data() + fields[a].size() || idx < 1)
            throw UsageError("--dims: '" + fields[a] + "' is not a column index");
        if (static_cast<std::size_t>(idx) > ds.dimension())
            throw std::runtime_error("--dims: column " + std::to_string(idx) +
                                     " exceeds the dataset's " +
                                     std::to_string(ds.dimension()) + " coordinates");
        cols[a] = static_cast<std::size_t>(idx - 1);
    }
    return cols;
}

struct KMeansFlags {
    std::string input;
    std::size_t k = 0;
    std::string centers;
    std::string centers_file;
    std::optional<std::uint64_t> seed;
    std::size_t max_iters = 100;
    bool precise = false;
    std::string labels_path;
    std::string trace_path;
    std::string svg_path;
    std::string dims;
};

int run_kmeans(const KMeansFlags& f) {
    KMeansConfig cfg;
    cfg.k = f.k;
    cfg.max_iterations = f.max_iters;
    cfg.seed = f.seed;
    if (!f.centers.empty()) cfg.centers = parse_centers_string(f.centers);
    if (!f.centers.empty() && cfg.centers.size() != f.k)
        throw UsageError("--centers lists " + std::to_string(cfg.centers.size()) +
                         " centers but --k is " + std::to_string(f.k));
    if (f.centers.empty() && f.centers_file.empty() && !f.seed)
        throw UsageError("--seed is required when no initial centers are given");

    Dataset ds = load_dataset(f.input);
    if (!f.centers_file.empty()) {
        cfg.centers = parse_centers_file(f.centers_file);
        if (cfg.centers.size() != f.k)
            throw std::runtime_error("centers file lists " + std::to_string(cfg.centers.size()) +
                                     " centers but --k is " + std::to_string(f.k));
    }
    KMeansResult result = lloyd(ds, cfg);

    if (!f.labels_path.empty()) {
        std::ofstream out = open_out(f.labels_path);
        write_labels_csv(out, ds, result.labels);
        write_kmeans_summary(std::cout, result, ansi_enabled());
    } else {
        write_labels_csv(std::cout, ds, result.labels);
    }
    if (!f.trace_path.empty()) {
        std::ofstream out = open_out(f.trace_path);
        write_trace_tsv(out, ds, result.trace, f.precise);
    }
    if (!f.svg_path.empty()) {
        std::array<std::size_t, 2> cols = scatter_columns(ds, f.dims);
        std::vector<std::array<double, 2>> pts;
        pts.reserve(ds.size());
        for (std::size_t i = 0; i < ds.size(); ++i)
            pts.push_back({ds.point(i).coords[cols[0]], ds.point(i).coords[cols[1]]});
        std::ofstream out = open_out(f.svg_path);
        out << scatter_svg(pts, result.labels);
    }
    return 0;
}

struct SpectralFlags {
    std::string edges;
    std::optional<int> target_parts;
    std::optional<double> lambda2_stop;
    double alpha = 0.0;
    bool median = false;
    int min_size = 1;
    bool components_first = false;
    std::string out_path;
    std::string svg_path;
};

int run_spectral(const SpectralFlags& f) {
    if (f.target_parts.has_value() == f.lambda2_stop.has_value())
        throw UsageError("give exactly one of --parts and --lambda2-stop");

    Graph g = load_graph(f.edges);
    if (!f.components_first) {
        Partition comps = connected_components(g);
        if (comps.part_count() != 1) {
            std::vector<std::vector<int>> groups = comps.groups();
            std::string msg = "graph is disconnected: " + std::to_string(groups.size()) +
                              " components with sizes";
            for (const std::vector<int>& grp : groups) msg += " " + std::to_string(grp.size());
            throw std::runtime_error(msg + " (use --components-first to split them)");
        }
    }

    RecursionConfig cfg;
    cfg.target_parts = f.target_parts;
    cfg.lambda2_stop = f.lambda2_stop;
    cfg.min_part_size = f.min_size;
    cfg.split.alpha = f.alpha;
    cfg.split.median_split = f.median;
    SpectralReport report = recursive_partition(g, cfg);

    write_spectral_report(std::cout, g, report, ansi_enabled());
    if (!f.out_path.empty()) {
        std::ofstream out = open_out(f.out_path);
        write_parts_csv(out, report.partition);
    } else {
        std::cout << '\n';
        write_parts_csv(std::cout, report.partition);
    }
    if (!f.svg_path.empty()) {
        std::ofstream out = open_out(f.svg_path);
        out << graph_svg(g, report.partition);
    }
    return 0;
}

struct LaplacianFlags {
    std::string edges;
    int eigs = 0;
};

int run_laplacian(const LaplacianFlags& f) {
    Graph g = load_graph(f.edges);
    SymMatrix l = laplacian(g);
    std::cout << "adjacency matrix:\n" << adjacency_matrix(g).to_text();
    std::cout << "degree matrix:\n" << degree_matrix(g).to_text();
    std::cout << "laplacian matrix:\n" << l.to_text();
    if (f.eigs > 0) {
        std::vector<EigenPair> pairs = smallest_k(l, static_cast<std::size_t>(f.eigs));
        std::cout << "eigenvalues:";
        for (const EigenPair& p : pairs) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.4f", p.value);
            std::string text = buf;
            if (text.find_first_not_of("-0.") == std::string::npos && text[0] == '-')
                text.erase(0, 1);
            std::cout << ' ' << text;
        }
        std::cout << '\n';
    }
    return 0;
}

struct LatticeFlags {
    std::string dims;
    std::string out_path;
};

int run_lattice(const LatticeFlags& f) {
    std::vector<int> dims;
    for (const std::string& field : split_on(f.dims, ',')) {
        int d = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), d);
        if (ec != std::errc{} || ptr != field.data() + field.size() || d < 1)
            throw UsageError("--dims: '" + field + "' is not a positive extent");
        dims.push_back(d);
    }
    Graph g = generate_lattice(dims);
    if (!f.out_path.empty()) {
        std::ofstream out = open_out(f.out_path);
        write_edge_list(out, g);
    } else {
        write_edge_list(std::cout, g);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"clustering and spectral graph partitioning toolkit"};
    app.require_subcommand(1);

    KMeansFlags kf;
    CLI::App* km = app.add_subcommand("kmeans", "Lloyd clustering over a points CSV");
    km->add_option("--input", kf.input, "points CSV (header id,<col>,...)")->required();
    km->add_option("--k", kf.k, "cluster count")->required()->check(CLI::PositiveNumber);
    CLI::Option* opt_centers =
        km->add_option("--centers", kf.centers, "initial centers 'x1,y1;x2,y2;...'");
    CLI::Option* opt_cfile =
        km->add_option("--centers-file", kf.centers_file, "initial centers, one per line");
    opt_centers->excludes(opt_cfile);
    km->add_option("--seed", kf.seed, "RNG seed for sampled initial centers");
    km->add_option("--max-iters", kf.max_iters, "iteration cap")->check(CLI::PositiveNumber);
    km->add_flag("--precise", kf.precise, "full-precision distances in the trace");
    km->add_option("--labels", kf.labels_path, "labels CSV path (default: stdout)");
    km->add_option("--trace", kf.trace_path, "iteration trace TSV path");
    km->add_option("--svg", kf.svg_path, "scatter plot path");
    km->add_option("--dims", kf.dims, "1-based coordinate columns 'i,j' for the plot");

    SpectralFlags sf;
    CLI::App* sp = app.add_subcommand("spectral", "recursive Fiedler bisection of an edge list");
    sp->add_option("--edges", sf.edges, "edge list path")->required();
    sp->add_option("--parts", sf.target_parts, "stop at this many parts")
        ->check(CLI::Range(2, 1000000000));
    sp->add_option("--lambda2-stop", sf.lambda2_stop,
                   "stop splitting parts whose lambda2 exceeds this");
    CLI::Option* opt_alpha = sp->add_option("--alpha", sf.alpha, "Fiedler split threshold");
    sp->add_flag("--median", sf.median, "split at the median Fiedler entry")->excludes(opt_alpha);
    sp->add_option("--min-size", sf.min_size, "parts smaller than twice this are final")
        ->check(CLI::PositiveNumber);
    sp->add_flag("--components-first", sf.components_first,
                 "accept disconnected input by splitting into components");
    sp->add_option("--out", sf.out_path, "parts CSV path (default: stdout)");
    sp->add_option("--svg", sf.svg_path, "circular layout plot path");

    LaplacianFlags lf;
    CLI::App* la = app.add_subcommand("laplacian", "print A, D and L for an edge list");
    la->add_option("--edges", lf.edges, "edge list path")->required();
    la->add_option("--eigs", lf.eigs, "also print this many smallest eigenvalues")
        ->check(CLI::PositiveNumber);

    LatticeFlags tf;
    CLI::App* lt = app.add_subcommand("lattice", "emit a grid graph edge list");
    lt->add_option("--dims", tf.dims, "extents 'n1,n2,...'")->required();
    lt->add_option("--out", tf.out_path, "edge list path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (km->parsed()) return run_kmeans(kf);
        if (sp->parsed()) return run_spectral(sf);
        if (la->parsed()) return run_laplacian(lf);
        return run_lattice(tf);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
