#pragma once
// Type 1 / Type 2 configuration detectors (sound pre-filters for lifting).
// Region geometry calibrated against the exhaustive lift oracle at n <= 5.

#include <string>
#include <vector>

#include "cubik/grid.hpp"

namespace cubik {

enum class ObstructionKind { Type1a, Type1b, Type1c, Type2 };

struct ObstructionMatch {
  ObstructionKind kind;
  int anchor;             // the marked X-bend (b0, or c0 for Type 2)
  int ba = -1, bb = -1;   // entering/exiting bends (Type 1), or c1/witness (Type 2)
  int row = 0, col = 0;   // anchor X position
};

enum class Verdict { NoPartialOrder, Type1Found, Type2Found, Candidate };

struct FilterVerdict {
  Verdict verdict;
  std::vector<ObstructionMatch> matches;
};

std::vector<ObstructionMatch> detect_type1(const Grid& g);
std::vector<ObstructionMatch> detect_type2(const Grid& g);
FilterVerdict filter(const Grid& g);

// one line: "<verdict> [kind@(row,col)]..."
std::string verdict_line(const FilterVerdict& v);

}  // namespace cubik
