#pragma once
// X-bend decomposition, the partial order on bends, and lifting a grid to a
// cube diagram by searching linear extensions with interval pruning.

#include <optional>
#include <vector>

#include "cubik/cube.hpp"
#include "cubik/grid.hpp"

namespace cubik {

// Bend i is anchored at the X in row i: the horizontal of row i into the X
// plus the vertical of column x[i] out of it.
struct Bend {
  int row = 0, col = 0;   // the X corner
  int vlo = 0, vhi = 0;   // vertical span (rows) at column col
  int hlo = 0, hhi = 0;   // horizontal span (cols) at row
  int succ = 0;           // next bend along the knot
  int orow = 0, ocol = 0; // O marking joining this bend to succ
};

std::vector<Bend> x_bends(const Grid& g);

struct BendOrder {
  std::vector<std::pair<int, int>> edges; // (a,b): L[a] > L[b] (a crosses over b)
  bool acyclic = true;
};
BendOrder bend_order(const Grid& g);

// (b, b1, b2): L[b] may not lie strictly between L[b1] and L[b2]; one per
// offending (O marking, third bend) pair. b1 is the bend whose vertical ends
// at the O, b2 the bend whose horizontal starts there.
std::vector<std::array<int, 3>> interval_constraints(const Grid& g);

enum class LiftFail { NoPartialOrder, NoValidExtension };

struct LiftResult {
  std::optional<CubeDiagram> cube;
  std::vector<int> levels;      // L[bend] when lifted
  std::optional<LiftFail> fail;
  bool ok() const { return cube.has_value(); }
};

struct MultiComponentUnsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Deterministic: the lexicographically least valid level vector in
// bend-index order. Throws MultiComponentUnsupported on links.
LiftResult lift(const Grid& g);
bool lift_exists(const Grid& g);  // same verdict, stops at first solution

// markings of the cube determined by a level assignment (unvalidated)
std::vector<Marking> cube_from_assignment(const Grid& g, const std::vector<int>& levels);

}  // namespace cubik
