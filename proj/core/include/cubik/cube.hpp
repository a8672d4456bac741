#pragma once
// Cube diagrams: 3n X/Y/Z markings in an n^3 lattice with the flat marking
// conditions and the three projection crossing conditions.

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubik/grid.hpp"

namespace cubik {

enum class MarkType : char { X = 'X', Y = 'Y', Z = 'Z' };

struct Marking {
  MarkType t;
  std::array<int, 3> p;  // (i, j, k) = (x, y, z) cell indices
  bool operator==(const Marking& m) const { return t == m.t && p == m.p; }
};

struct CubeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CubeDiagram {
  int n = 0;
  std::vector<Marking> markings;  // sorted by (t, k, j, i)
};

// Oriented lattice knot: edges X->Y (z-parallel), Y->Z (x-parallel),
// Z->X (y-parallel), each connecting markings sharing two coordinates.
struct LatticeEdge {
  std::array<int, 3> from, to;
  int axis;  // varying axis
};

// Full independent validation; throws CubeError naming the violated
// condition (FlatCountViolation / RightAngleViolation / VertexTypeViolation /
// CrossingViolation) on failure.
CubeDiagram validate_cube(int n, std::vector<Marking> markings);

std::vector<LatticeEdge> knot_from_cube(const CubeDiagram& c);

struct ProjectedCrossing {
  int row, col;
  int over_coord, under_coord;  // omitted-axis coordinates; over > under
};
struct Projection {
  Grid grid;
  std::vector<ProjectedCrossing> crossings;
};

// axis 0/1/2 = project out x/y/z. Out-z gives back the lifted grid.
Projection project(const CubeDiagram& c, int axis);

// {"size": n, "markings": [{"t": "X", "p": [i,j,k]}, ...]} sorted by (t,k,j,i)
std::string cube_to_json(const CubeDiagram& c);
CubeDiagram cube_from_json(const std::string& text);  // validates

}  // namespace cubik
