#include <doctest.h>

#include "cubik/invariants.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace cubik;

static Laurent from_pairs(std::initializer_list<std::pair<int, long long>> ps) {
  Laurent r;
  for (auto [e, c] : ps) r += Laurent::monomial(e, c);
  return r;
}

TEST_CASE("bracket of the unknot is 1") {
  Grid g = make_grid(2, {1, 0}, {0, 1});
  CHECK(kauffman_bracket(g) == Laurent::monomial(0, 1));
  CHECK(jones(g) == Laurent::monomial(0, 1));
}

TEST_CASE("transfer-matrix bracket equals brute state sum, n <= 4") {
  for (int n = 2; n <= 4; ++n)
    testutil::for_all_grids(n, [](const Grid& g) {
      CHECK(kauffman_bracket(g) == oracles::bracket_brute(g));
    });
}

TEST_CASE("jones of the trefoils") {
  Grid left = standard_diagram(3, 1, 2);
  CHECK(jones(left) == from_pairs({{-4, -1}, {-3, 1}, {-1, 1}}));
  CHECK(jones(mirror(left)) == from_pairs({{4, -1}, {3, 1}, {1, 1}}));
  CHECK(jones(mirror(left)) == jones(left).invert_variable());
}

TEST_CASE("jones throws on a two-component link") {
  Grid link = make_grid(4, {1, 0, 3, 2}, {0, 1, 2, 3});
  CHECK(component_count(link) == 2);
  CHECK_THROWS_AS(jones(link), NonIntegralExponent);
}

TEST_CASE("legendrian data of the standard trefoil") {
  auto d = legendrian_data(standard_diagram(3, 1, 2));
  CHECK(d.writhe == -3);
  CHECK(d.down_cusps + d.up_cusps == 2 * d.right_cusps);
  CHECK(d.tb == -6);
  CHECK(d.r == 1);
  CHECK(legendrian_data(standard_diagram(3, 2, 1)).r == -1);
}

TEST_CASE("knot table parse/serialize/identify") {
  auto table = KnotTable::parse("unknot; 2; 0:1\ntrefoil_left; 5; -4:-1,-3:1,-1:1\n");
  CHECK(table.serialize() == "unknot; 2; 0:1\ntrefoil_left; 5; -4:-1,-3:1,-1:1\n");
  const KnotRecord* rec = identify(standard_diagram(3, 1, 2), table);
  REQUIRE(rec != nullptr);
  CHECK(rec->name == "trefoil_left");
  CHECK(rec->alpha == 5);
  CHECK(identify(mirror(standard_diagram(3, 1, 2)), table) == nullptr);
  CHECK_THROWS_WITH_AS(KnotTable::parse("a; 2; 0:1\nb; 3; 0:1\n"),
                       doctest::Contains("AmbiguousFingerprint"), std::runtime_error);
}

TEST_CASE("builtin table identifies mirror pairs distinctly") {
  auto table = KnotTable::builtin();
  Grid left = standard_diagram(3, 1, 2);
  CHECK(identify(left, table)->name == "trefoil_left");
  CHECK(identify(mirror(left), table)->name == "trefoil_right");
  CHECK(identify(standard_diagram(5, 1, 4), table)->name == "torus_5_2_left");
  CHECK(identify(standard_diagram(7, 1, 6), table)->name == "torus_7_2_left");
}

TEST_CASE("max_tb_rotation_set") {
  CHECK(max_tb_rotation_set(3) == std::set<int>{-1, 1});
  CHECK(max_tb_rotation_set(5) == std::set<int>{-3, -1, 1, 3});
  CHECK(max_tb_rotation_set(7) == std::set<int>{-5, -3, -1, 1, 3, 5});
}

TEST_CASE("standard diagrams: size, knottedness, invariants") {
  auto table = KnotTable::builtin();
  for (int p : {3, 5, 7}) {
    std::string want = "torus_" + std::to_string(p) + "_2_left";
    if (p == 3) want = "trefoil_left";
    for (int j = 1; j < p; ++j) {
      int k = p - j;
      Grid g = standard_diagram(p, j, k);
      CHECK(g.n == p + 2);
      CHECK(component_count(g) == 1);
      CHECK(identify(g, table)->name == want);
      auto d = legendrian_data(g);
      CHECK(d.tb == -2 * p);
      CHECK(d.r == k - j);
    }
  }
  CHECK_THROWS_AS(standard_diagram(4, 2, 2), GridError);
  CHECK_THROWS_AS(standard_diagram(3, 0, 3), GridError);
}
