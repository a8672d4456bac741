#pragma once
// Exhaustive pruned enumeration of grid diagrams: generate -> filter -> lift
// -> identify, with sharding, checkpointing, and deterministic parallelism.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cubik/grid.hpp"
#include "cubik/invariants.hpp"
#include "cubik/lift.hpp"
#include "cubik/obstruct.hpp"

namespace cubik {

struct EnumSpec {
  int n = 0;
  bool knots_only = true;    // single components only
  bool use_filters = true;   // NoPartialOrder -> Type1/Type2 before lift
  bool do_lift = true;
  std::vector<int> prefix;   // shard key: required first entries of x_cols
  std::uint64_t resume_xrank = 0;  // completed x permutations to skip
};

struct EnumStats {
  std::uint64_t visited = 0;       // all (x,o) pairs with no shared cell
  std::uint64_t single_component = 0;
  std::uint64_t verdicts[4] = {0, 0, 0, 0};  // NoPartialOrder, T1, T2, Candidate
  std::uint64_t lifted = 0;
  std::uint64_t xperms_done = 0;
  void merge(const EnumStats& s);
  std::string serialize() const;
  static EnumStats deserialize(const std::string& line);
  bool operator==(const EnumStats&) const = default;
};

// consumer sees each surviving grid with its verdict (Candidate when filters
// are off) and the lift result for candidates when lifting is enabled
using VisitFn = std::function<void(const Grid&, Verdict, const LiftResult*)>;
// called after each completed x permutation with cumulative in-shard stats;
// return false to stop (checkpoint-and-stop)
using ProgressFn = std::function<bool(std::uint64_t xrank, const EnumStats&)>;

EnumStats enumerate_grids(const EnumSpec& spec, const VisitFn& consumer,
                          const ProgressFn& progress = {});

std::vector<EnumSpec> shard_space(int n, int prefix_len);

// threads <= 0: hardware concurrency; always capped by CUBIK_THREADS
int resolve_threads(int requested);

struct SurveyWitness {
  int n = 0;
  std::vector<int> x, o, levels;
  bool better_than(const SurveyWitness& w) const;  // (n, x, o) lexicographic
};

struct SurveyResult {
  // fingerprint id -> best witness
  std::map<std::string, SurveyWitness> found;
  std::map<int, EnumStats> stats_by_n;
};

// Exhaustive survey over sizes 2..max_n. Deterministic across thread counts
// and kill/restart. checkpoint_dir "" disables checkpointing. stop_after is
// a test hook: abort (after checkpointing) once that many x permutations
// have completed globally; 0 = run to completion.
SurveyResult cube_number_survey(int max_n, const KnotTable& table, int threads = 0,
                                const std::string& checkpoint_dir = "",
                                std::uint64_t stop_after = 0);

// CSV `knot,fingerprint_id,min_cube_size,witness_file`; table knots never
// lifted get min_cube_size = max_n+1 and witness "-". Writes witness cube
// JSON files into witness_dir unless empty.
std::string survey_csv(const SurveyResult& r, int max_n, const KnotTable& table,
                       const std::string& witness_dir = "");

}  // namespace cubik
