#pragma once
// ASCII / SVG renderers for grids (with front cusps) and cubes (isometric).

#include <string>

#include "cubik/cube.hpp"
#include "cubik/grid.hpp"

namespace cubik {

std::string render_grid_ascii(const Grid& g);  // top row first, X/O/. per cell
std::string render_grid_svg(const Grid& g);    // segments, markings, cusp dots
std::string render_cube_ascii(const CubeDiagram& c);  // z-slices bottom-up
std::string render_cube_svg(const CubeDiagram& c);    // isometric wireframe

}  // namespace cubik
