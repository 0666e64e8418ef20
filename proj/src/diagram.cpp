#include "grasscat/diagram.hpp"

#include <algorithm>
#include <sstream>

namespace grasscat {

namespace {

std::vector<int> raw_heights(const Rim& r) {
    std::vector<int> h(r.n() + 1, 0);
    for (int c = 1; c <= r.n(); ++c) h[c] = h[c - 1] + (r.contains(c) ? -1 : 1);
    return h;
}

const char* kColours[] = {"black", "#c0392b", "#2471a3", "#1e8449", "#7d3c98"};

}  // namespace

DiagramData lattice_diagram_data(const Profile& p) {
    DiagramData d;
    d.n = p.n();
    d.k = p.k();
    for (int c = 0; c <= d.n; ++c) d.column_labels.push_back(std::to_string(wrap(c, d.n)));
    for (std::size_t j = 0; j < p.layers.size(); ++j) {
        DiagramLayer L;
        L.rim = p.layers[j];
        L.heights = raw_heights(L.rim);
        if (j > 0) {
            const auto& up = d.layers.back().heights;
            int off = up[0] - L.heights[0];
            for (int c = 0; c <= d.n; ++c) off = std::min(off, up[c] - L.heights[c]);
            for (auto& h : L.heights) h += off;
        }
        d.layers.push_back(std::move(L));
    }
    int lo = d.layers.back().heights[0];
    for (auto& L : d.layers)
        for (int h : L.heights) lo = std::min(lo, h);
    for (auto& L : d.layers)
        for (auto& h : L.heights) h += 1 - lo;
    d.floor = 0;
    d.top = 0;
    for (auto& L : d.layers)
        for (int h : L.heights) d.top = std::max(d.top, h);
    for (auto& L : d.layers)
        for (int c = 0; c <= d.n; ++c)
            for (int y = L.heights[c]; y >= d.floor; y -= 2) L.points.push_back({c, y});
    return d;
}

std::string to_svg(const DiagramData& d) {
    const int unit = 40, margin = 40;
    const int width = 2 * margin + d.n * unit, height = 2 * margin + (d.top - d.floor + 2) * unit;
    auto X = [&](double c) { return margin + c * unit; };
    auto Y = [&](double y) { return margin + (d.top - y) * unit; };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\" viewBox=\"0 0 "
       << width << " " << height << "\">\n";
    for (int c : {0, d.n})
        os << "  <line x1=\"" << X(c) << "\" y1=\"" << Y(d.top) << "\" x2=\"" << X(c) << "\" y2=\"" << Y(d.floor - 2)
           << "\" stroke=\"gray\" stroke-dasharray=\"2,4\"/>\n";
    for (std::size_t j = 0; j < d.layers.size(); ++j) {
        const auto& L = d.layers[j];
        const double dx = 0.12 * static_cast<double>(j);
        const char* colour = kColours[j % 5];
        for (auto [c, y] : L.points)
            os << "  <circle cx=\"" << X(c + dx) << "\" cy=\"" << Y(y) << "\" r=\"3\" fill=\"" << colour << "\"/>\n";
        os << "  <polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"" << (j == 0 ? 4 : 2.5) << "\" points=\"";
        for (int c = 0; c <= d.n; ++c) os << (c ? " " : "") << X(c + dx) << "," << Y(L.heights[c]);
        os << "\"/>\n";
        for (int c = 1; c <= d.n; ++c) {
            const double mx = X(c - 0.5 + dx), my = Y((L.heights[c - 1] + L.heights[c]) / 2.0) - 8;
            os << "  <text x=\"" << mx << "\" y=\"" << my << "\" font-size=\"12\" text-anchor=\"middle\" fill=\"" << colour
               << "\">" << c << "</text>\n";
        }
    }
    for (int c = 0; c <= d.n; ++c)
        os << "  <text x=\"" << X(c) << "\" y=\"" << Y(d.floor - 2) + 16 << "\" font-size=\"12\" text-anchor=\"middle\">"
           << d.column_labels[c] << "</text>\n";
    os << "</svg>\n";
    return os.str();
}

std::string to_tikz(const DiagramData& d) {
    std::ostringstream os;
    os << "\\begin{tikzpicture}[scale=0.8]\n";
    for (std::size_t j = 0; j < d.layers.size(); ++j) {
        const auto& L = d.layers[j];
        for (auto [c, y] : L.points) os << "\\draw (" << c << "," << y << ") circle(0.08cm) [fill=black];\n";
        os << "\\draw [" << (j == 0 ? "ultra thick" : "very thick, dashed") << "] ";
        for (int c = 0; c <= d.n; ++c) os << (c ? " -- " : "") << "(" << c << "," << L.heights[c] << ")";
        os << ";\n";
        for (int c = 1; c <= d.n; ++c)
            os << "\\path (" << c - 1 << "," << L.heights[c - 1] << ") -- node[above]{$" << c << "$} (" << c << ","
               << L.heights[c] << ");\n";
    }
    os << "\\draw [dotted] (0," << d.floor - 2 << ") -- (0," << d.layers[0].heights[0] << ");\n";
    os << "\\draw [dotted] (" << d.n << "," << d.floor - 2 << ") -- (" << d.n << "," << d.layers[0].heights[d.n] << ");\n";
    os << "\\end{tikzpicture}\n";
    return os.str();
}

std::string orbit_dot(const TauOrbit& o) {
    std::ostringstream os;
    os << "digraph orbit {\n  rankdir=LR;\n";
    for (std::size_t i = 0; i < o.members.size(); ++i)
        os << "  m" << i << " [label=\"" << o.members[i].label() << "\"];\n";
    for (std::size_t i = 0; i < o.members.size(); ++i)
        os << "  m" << i << " -> m" << (i + 1) % o.members.size() << " [label=\"Omega\"];\n";
    os << "}\n";
    return os.str();
}

std::string orbit_tikz(const TauOrbit& o) {
    std::ostringstream os;
    os << "\\begin{tikzpicture}[xscale=2]\n";
    for (std::size_t i = 0; i < o.members.size(); ++i) {
        std::string lab = o.members[i].label();
        if (auto bar = lab.find('|'); bar != std::string::npos)
            lab = "\\frac{" + lab.substr(0, bar) + "}{" + lab.substr(bar + 1) + "}";
        os << "\\node (m" << i << ") at (" << i << ",0) {$" << lab << "$};\n";
    }
    for (std::size_t i = 0; i + 1 < o.members.size(); ++i) os << "\\draw [->] (m" << i << ") -- (m" << i + 1 << ");\n";
    os << "\\end{tikzpicture}\n";
    return os.str();
}

}  // namespace grasscat
