#pragma once
// Grid moves (cyclic permutation / commutation on the torus), orbits,
// reachability classes, and the Legendrian census.

#include <cstdint>
#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "cubik/grid.hpp"
#include "cubik/invariants.hpp"

namespace cubik {

enum class MoveKind { CyclicUp, CyclicDown, CyclicLeft, CyclicRight, CommuteRows, CommuteCols };

struct Move {
  MoveKind kind;
  int index = 0;  // for commutations: lines i and i+1 mod n
};

struct InterleavedPair : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// throws InterleavedPair if the commutation is undefined (interleaved or
// coordinate-sharing adjacent pair)
Grid apply_move(const Grid& g, const Move& m);
bool move_legal(const Grid& g, const Move& m);

using GridSet = std::unordered_set<GridKey, GridKeyHash>;
Grid grid_from_key(int n, const GridKey& k);

GridSet cyclic_orbit(const Grid& g);

struct OrbitReport {
  Grid start;
  GridSet reached;
  // any member whose (jones fp, tb, r) differs from the start's: surfaced,
  // never silently absorbed
  std::vector<Grid> invariant_violations;
};
OrbitReport reachability_class(const Grid& g, bool check_invariants = false);

struct CensusBucket {
  std::string fingerprint_id;
  int tb = 0, r = 0;
  std::uint64_t count = 0;
  int num_classes = 0;
  std::uint64_t lifts_found = 0;
  std::vector<GridKey> members;  // kept for left-torus analysis; sorted
};

struct CensusResult {
  int n = 0;
  // key: (fingerprint_id, tb, r)
  std::map<std::tuple<std::string, int, int>, CensusBucket> buckets;
};

// Enumerate all size-n single-component grids, bucket by (fingerprint, tb, r),
// decompose buckets into move-reachability classes, count lifting members.
CensusResult legendrian_census(int n, const KnotTable& table, int threads = 0);

// CSV: fingerprint_id, tb, r, count, num_classes, lifts_found
std::string census_csv(const CensusResult& c);

}  // namespace cubik
