#include "partitionlab/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace partitionlab {

namespace {

constexpr int kScatterW = 640;
constexpr int kScatterH = 480;
constexpr int kMarginLeft = 50;
constexpr int kMarginRight = 15;
constexpr int kMarginTop = 15;
constexpr int kMarginBottom = 40;

std::string fmt(const char* pattern, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, pattern, value);
    return buf;
}

std::string num2(double value) { return fmt("%.2f", value); }

const char* color_for(int label) {
    const auto& pal = svg_palette();
    const int idx = (label - 1) % static_cast<int>(pal.size());
    return pal[static_cast<std::size_t>(idx < 0 ? idx + static_cast<int>(pal.size()) : idx)];
}

}  // namespace

const std::array<const char*, 8>& svg_palette() {
    static const std::array<const char*, 8> colors = {
        "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
        "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};
    return colors;
}

std::string scatter_svg(const std::vector<std::array<double, 2>>& points,
                        const std::vector<int>& labels) {
    if (points.empty()) throw std::invalid_argument("scatter_svg: no points");
    if (labels.size() != points.size())
        throw std::invalid_argument("scatter_svg: label count does not match points");

    double xmin = points[0][0], xmax = points[0][0];
    double ymin = points[0][1], ymax = points[0][1];
    for (const auto& p : points) {
        xmin = std::min(xmin, p[0]);
        xmax = std::max(xmax, p[0]);
        ymin = std::min(ymin, p[1]);
        ymax = std::max(ymax, p[1]);
    }
    const double xspan = xmax > xmin ? xmax - xmin : 1.0;
    const double yspan = ymax > ymin ? ymax - ymin : 1.0;
    const double plot_w = kScatterW - kMarginLeft - kMarginRight;
    const double plot_h = kScatterH - kMarginTop - kMarginBottom;
    auto sx = [&](double x) { return kMarginLeft + (x - xmin) / xspan * plot_w; };
    auto sy = [&](double y) { return kMarginTop + (ymax - y) / yspan * plot_h; };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(kScatterW) +
           "\" height=\"" + std::to_string(kScatterH) + "\" viewBox=\"0 0 " +
           std::to_string(kScatterW) + " " + std::to_string(kScatterH) + "\">\n";
    out += "<rect width=\"" + std::to_string(kScatterW) + "\" height=\"" +
           std::to_string(kScatterH) + "\" fill=\"#ffffff\"/>\n";

    const std::string x0 = num2(kMarginLeft), x1 = num2(kScatterW - kMarginRight);
    const std::string y0 = num2(kScatterH - kMarginBottom), y1 = num2(kMarginTop);
    out += "<line x1=\"" + x0 + "\" y1=\"" + y0 + "\" x2=\"" + x1 + "\" y2=\"" + y0 +
           "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    out += "<line x1=\"" + x0 + "\" y1=\"" + y0 + "\" x2=\"" + x0 + "\" y2=\"" + y1 +
           "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";

    auto tick_label = [](double v) { return fmt("%.6g", v); };
    out += "<text x=\"" + x0 + "\" y=\"" + num2(kScatterH - kMarginBottom + 18) +
           "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">" +
           tick_label(xmin) + "</text>\n";
    out += "<text x=\"" + x1 + "\" y=\"" + num2(kScatterH - kMarginBottom + 18) +
           "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">" +
           tick_label(xmax) + "</text>\n";
    out += "<text x=\"" + num2(kMarginLeft - 6) + "\" y=\"" + num2(kScatterH - kMarginBottom) +
           "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"end\">" +
           tick_label(ymin) + "</text>\n";
    out += "<text x=\"" + num2(kMarginLeft - 6) + "\" y=\"" + num2(kMarginTop + 10) +
           "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"end\">" +
           tick_label(ymax) + "</text>\n";

    for (std::size_t i = 0; i < points.size(); ++i) {
        out += "<circle cx=\"" + num2(sx(points[i][0])) + "\" cy=\"" + num2(sy(points[i][1])) +
               "\" r=\"4\" fill=\"" + color_for(labels[i]) + "\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

std::string graph_svg(const Graph& g, const Partition& parts) {
    if (g.vertex_count() < 1) throw std::invalid_argument("graph_svg: empty graph");
    if (parts.vertex_count() != g.vertex_count())
        throw std::invalid_argument("graph_svg: partition does not match graph");

    constexpr int kSide = 480;
    constexpr double kCx = kSide / 2.0;
    constexpr double kCy = kSide / 2.0;
    constexpr double kR = 190.0;
    const int n = g.vertex_count();
    std::vector<std::array<double, 2>> pos(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        const double angle = -std::numbers::pi / 2 + 2.0 * std::numbers::pi * v / n;
        pos[static_cast<std::size_t>(v)] = {kCx + kR * std::cos(angle),
                                            kCy + kR * std::sin(angle)};
    }

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(kSide) +
           "\" height=\"" + std::to_string(kSide) + "\" viewBox=\"0 0 " + std::to_string(kSide) +
           " " + std::to_string(kSide) + "\">\n";
    out += "<rect width=\"" + std::to_string(kSide) + "\" height=\"" + std::to_string(kSide) +
           "\" fill=\"#ffffff\"/>\n";
    for (const Edge& e : g.edges()) {
        const auto& a = pos[static_cast<std::size_t>(e.u)];
        const auto& b = pos[static_cast<std::size_t>(e.v)];
        out += "<line x1=\"" + num2(a[0]) + "\" y1=\"" + num2(a[1]) + "\" x2=\"" + num2(b[0]) +
               "\" y2=\"" + num2(b[1]) + "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
    }
    for (int v = 0; v < n; ++v) {
        const auto& p = pos[static_cast<std::size_t>(v)];
        out += "<circle cx=\"" + num2(p[0]) + "\" cy=\"" + num2(p[1]) + "\" r=\"10\" fill=\"" +
               color_for(parts.part(v) + 1) + "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace partitionlab
