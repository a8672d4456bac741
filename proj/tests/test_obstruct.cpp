#include <doctest.h>

#include "cubik/lift.hpp"
#include "cubik/obstruct.hpp"
#include "test_helpers.hpp"

using namespace cubik;

TEST_CASE("filter verdicts are sound, n = 4 exhaustive") {
  int candidates = 0, filtered = 0;
  testutil::for_all_grids(4, [&](const Grid& g) {
    auto v = filter(g);
    if (v.verdict == Verdict::Candidate) {
      ++candidates;
    } else {
      ++filtered;
      CHECK_FALSE(lift_exists(g));  // soundness: filtered => no lift
    }
  }, /*knots_only=*/true);
  CHECK(candidates + filtered == 144);
  CHECK(filtered > 0);
}

TEST_CASE("verdict precedence and line format") {
  Grid cyc(7, {0, 1, 2, 3, 4, 5, 6}, {5, 6, 0, 1, 2, 3, 4});
  auto v = filter(cyc);
  CHECK(v.verdict == Verdict::NoPartialOrder);
  CHECK(verdict_line(v).rfind("NoPartialOrder", 0) == 0);

  Grid unknot(2, {1, 0}, {0, 1});
  auto u = filter(unknot);
  CHECK(u.verdict == Verdict::Candidate);
  CHECK(verdict_line(u) == "Candidate");
}

TEST_CASE("detectors report anchor coordinates inside the grid") {
  testutil::for_all_grids(5, [&](const Grid& g) {
    for (auto& m : detect_type1(g)) {
      CHECK(0 <= m.row);
      CHECK(m.row < 5);
      CHECK(0 <= m.col);
      CHECK(m.col < 5);
    }
  }, /*knots_only=*/true);
}
