// cubik: grid/cube diagram pipeline CLI.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cubik/engine.hpp"
#include "cubik/invariants.hpp"
#include "cubik/lift.hpp"
#include "cubik/moves.hpp"
#include "cubik/obstruct.hpp"
#include "cubik/render.hpp"

using namespace cubik;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Grid load_grid(const std::string& path) { return parse_grid(slurp(path)); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"grid-diagram -> cube-diagram pipeline"};
  app.require_subcommand(1);
  int seed = 0;
  app.add_option("--seed", seed, "seed for randomized operations");

  std::string grid_path, cube_path, out_path, fmt = "text", ckpt_dir, out_dir;
  int n = 5, max_n = 5, threads = 0;
  bool expect_lift = false, no_filters = false, no_lift = false, all_components = false;

  auto* validate = app.add_subcommand("validate", "validate a grid file or cube JSON");
  validate->add_option("grid", grid_path);
  validate->add_option("--cube", cube_path);

  auto* liftc = app.add_subcommand("lift", "lift a grid to a cube diagram");
  liftc->add_option("grid", grid_path)->required();
  liftc->add_flag("--expect-lift", expect_lift);
  liftc->add_option("-o,--out", out_path);

  auto* obstruct = app.add_subcommand("obstruct", "run the Type 1/2 detectors");
  obstruct->add_option("grid", grid_path)->required();

  auto* invar = app.add_subcommand("invariants", "writhe, cusps, tb, rotation number");
  invar->add_option("grid", grid_path)->required();

  auto* jonesc = app.add_subcommand("jones", "Jones polynomial in t");
  jonesc->add_option("grid", grid_path)->required();

  auto* enumc = app.add_subcommand("enumerate", "enumerate grids of a given size");
  enumc->add_option("-n", n)->required();
  enumc->add_flag("--no-filters", no_filters);
  enumc->add_flag("--no-lift", no_lift);
  enumc->add_flag("--all-components", all_components);

  auto* surveyc = app.add_subcommand("survey", "cube-number survey over sizes 2..max-n");
  surveyc->add_option("--max-n", max_n)->required();
  surveyc->add_option("--threads", threads);
  surveyc->add_option("--checkpoint-dir", ckpt_dir);
  surveyc->add_option("--out", out_dir);

  auto* censusc = app.add_subcommand("census", "Legendrian census at a given size");
  censusc->add_option("-n", n)->required();
  censusc->add_option("--threads", threads);

  std::string move_kind;
  int move_index = 0;
  bool do_orbit = false, do_class = false;
  auto* movesc = app.add_subcommand("moves", "grid moves, orbits, classes");
  movesc->add_option("grid", grid_path)->required();
  movesc->add_flag("--orbit", do_orbit, "cyclic orbit size");
  movesc->add_flag("--class", do_class, "move-reachability class size");
  movesc->add_option("--apply", move_kind, "up|down|left|right|rows|cols");
  movesc->add_option("--index", move_index);

  auto* renderc = app.add_subcommand("render", "render a grid or cube");
  renderc->add_option("grid", grid_path);
  renderc->add_option("--cube", cube_path);
  renderc->add_option("--format", fmt)->check(CLI::IsMember({"ascii", "svg"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (*validate) {
      if (!cube_path.empty()) {
        cube_from_json(slurp(cube_path));
        std::cout << "valid cube\n";
      } else if (!grid_path.empty()) {
        load_grid(grid_path);
        std::cout << "valid grid\n";
      } else {
        std::cerr << "validate: need a grid file or --cube\n";
        return 2;
      }
    } else if (*liftc) {
      auto res = lift(load_grid(grid_path));
      if (res.ok()) {
        std::string json = cube_to_json(*res.cube);
        std::cout << json << '\n';
        if (!out_path.empty()) std::ofstream(out_path, std::ios::trunc) << json << '\n';
      } else {
        std::cout << "NotLiftable("
                  << (*res.fail == LiftFail::NoPartialOrder ? "NoPartialOrder" : "NoValidExtension")
                  << ")\n";
        if (expect_lift) return 1;
      }
    } else if (*obstruct) {
      std::cout << verdict_line(filter(load_grid(grid_path))) << '\n';
    } else if (*invar) {
      auto d = legendrian_data(load_grid(grid_path));
      std::cout << "writhe=" << d.writhe << " down_cusps=" << d.down_cusps
                << " up_cusps=" << d.up_cusps << " tb=" << d.tb << " r=" << d.r << '\n';
    } else if (*jonesc) {
      std::cout << jones(load_grid(grid_path)).serialize() << '\n';
    } else if (*enumc) {
      EnumSpec spec;
      spec.n = n;
      spec.knots_only = !all_components;
      spec.use_filters = !no_filters;
      spec.do_lift = !no_lift;
      auto stats = enumerate_grids(spec, {});
      std::cout << "visited=" << stats.visited << " single=" << stats.single_component
                << " no_partial_order=" << stats.verdicts[0] << " type1=" << stats.verdicts[1]
                << " type2=" << stats.verdicts[2] << " candidates=" << stats.verdicts[3]
                << " lifted=" << stats.lifted << '\n';
    } else if (*surveyc) {
      auto table = KnotTable::builtin();
      auto res = cube_number_survey(max_n, table, threads, ckpt_dir);
      if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
      std::string csv = survey_csv(res, max_n, table, out_dir);
      if (!out_dir.empty()) std::ofstream(out_dir + "/results.csv", std::ios::trunc) << csv;
      std::cout << csv;
    } else if (*censusc) {
      std::cout << census_csv(legendrian_census(n, KnotTable::builtin(), threads));
    } else if (*movesc) {
      Grid g = load_grid(grid_path);
      if (do_orbit) std::cout << "cyclic_orbit=" << cyclic_orbit(g).size() << '\n';
      if (do_class) std::cout << "class=" << reachability_class(g).reached.size() << '\n';
      if (!move_kind.empty()) {
        MoveKind k;
        if (move_kind == "up") k = MoveKind::CyclicUp;
        else if (move_kind == "down") k = MoveKind::CyclicDown;
        else if (move_kind == "left") k = MoveKind::CyclicLeft;
        else if (move_kind == "right") k = MoveKind::CyclicRight;
        else if (move_kind == "rows") k = MoveKind::CommuteRows;
        else if (move_kind == "cols") k = MoveKind::CommuteCols;
        else { std::cerr << "moves: bad --apply " << move_kind << '\n'; return 2; }
        std::cout << print_grid(apply_move(g, {k, move_index}));
      }
    } else if (*renderc) {
      if (!cube_path.empty()) {
        auto c = cube_from_json(slurp(cube_path));
        std::cout << (fmt == "svg" ? render_cube_svg(c) : render_cube_ascii(c));
      } else if (!grid_path.empty()) {
        Grid g = load_grid(grid_path);
        std::cout << (fmt == "svg" ? render_grid_svg(g) : render_grid_ascii(g));
      } else {
        std::cerr << "render: need a grid file or --cube\n";
        return 2;
      }
    }
  } catch (const InterleavedPair& e) {
    std::cout << "InterleavedPair: " << e.what() << '\n';
    return 1;
  } catch (const GridError& e) {
    std::cout << e.what() << '\n';
    return 1;
  } catch (const CubeError& e) {
    std::cout << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
