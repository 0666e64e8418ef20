#pragma once

#include <string>
#include <utility>
#include <vector>

#include "grasscat/module.hpp"
#include "grasscat/tubes.hpp"

namespace grasscat {

// Column c = 0..n, vertical coordinate y grows upwards in half steps.
struct DiagramLayer {
    Rim rim;
    std::vector<int> heights;                  // rim vertex height per column
    std::vector<std::pair<int, int>> points;   // lattice points (column, y) of this layer
};

struct DiagramData {
    int n = 0, k = 0;
    std::vector<std::string> column_labels;    // "n", "1", ..., "n"
    std::vector<DiagramLayer> layers;          // top layer first
    int floor = 0;                             // lowest drawn y
    int top = 0;                               // highest rim vertex
};

// Rims are stacked top first, each one touching the one above without overlap.
DiagramData lattice_diagram_data(const Profile& p);

std::string to_svg(const DiagramData& d);
std::string to_tikz(const DiagramData& d);

std::string orbit_dot(const TauOrbit& o);
std::string orbit_tikz(const TauOrbit& o);

}  // namespace grasscat
