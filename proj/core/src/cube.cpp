#include "cubik/cube.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

namespace cubik {

namespace {

void sort_markings(std::vector<Marking>& mks) {
  std::sort(mks.begin(), mks.end(), [](const Marking& a, const Marking& b) {
    if (a.t != b.t) return a.t < b.t;
    if (a.p[2] != b.p[2]) return a.p[2] < b.p[2];
    if (a.p[1] != b.p[1]) return a.p[1] < b.p[1];
    return a.p[0] < b.p[0];
  });
}

int diff_axis(const std::array<int, 3>& a, const std::array<int, 3>& b) {
  int axis = -1, cnt = 0;
  for (int i = 0; i < 3; ++i)
    if (a[i] != b[i]) { axis = i; ++cnt; }
  return cnt == 1 ? axis : -1;
}

}  // namespace

CubeDiagram validate_cube(int n, std::vector<Marking> mks) {
  if ((int)mks.size() != 3 * n) throw CubeError("FlatCountViolation(marking count)");
  for (const auto& m : mks)
    for (int a = 0; a < 3; ++a)
      if (m.p[a] < 0 || m.p[a] >= n) throw CubeError("FlatCountViolation(out of range)");
  // flats: axis a, level l
  for (int a = 0; a < 3; ++a) {
    for (int l = 0; l < n; ++l) {
      const Marking* byt[3] = {nullptr, nullptr, nullptr};
      int cnt[3] = {0, 0, 0};
      for (const auto& m : mks)
        if (m.p[a] == l) {
          int ti = m.t == MarkType::X ? 0 : m.t == MarkType::Y ? 1 : 2;
          ++cnt[ti]; byt[ti] = &m;
        }
      if (cnt[0] != 1 || cnt[1] != 1 || cnt[2] != 1)
        throw CubeError("FlatCountViolation(axis " + std::to_string(a) + ", level " + std::to_string(l) + ")");
      // vertex of the right angle: X in x-flats, Y in y-flats, Z in z-flats
      const Marking* vert = byt[a];
      const Marking* others[2];
      int oi = 0;
      for (int t = 0; t < 3; ++t)
        if (t != a) others[oi++] = byt[t];
      int d0 = diff_axis(vert->p, others[0]->p);
      int d1 = diff_axis(vert->p, others[1]->p);
      if (d0 < 0 || d1 < 0)
        throw CubeError("RightAngleViolation(axis " + std::to_string(a) + ", level " + std::to_string(l) + ")");
      if (d0 == d1)
        throw CubeError("VertexTypeViolation(axis " + std::to_string(a) + ", level " + std::to_string(l) + ")");
    }
  }
  CubeDiagram c{n, std::move(mks)};
  sort_markings(c.markings);
  // edge structure + crossing conditions
  auto edges = knot_from_cube(c);
  // projections: out z: y-par over x-par; out x: z-par over y-par; out y: x-par over z-par
  static const int over_axis[3] = {2, 0, 1};   // out-axis -> over edge direction
  static const int under_axis[3] = {1, 2, 0};
  for (int a = 0; a < 3; ++a) {
    int da = over_axis[a], db = under_axis[a];
    for (const auto& e1 : edges) {
      if (e1.axis != da) continue;
      for (const auto& e2 : edges) {
        if (e2.axis != db) continue;
        // e1 varies along da with fixed coord e1.from[db]; e2 vice versa
        int lo1 = std::min(e1.from[da], e1.to[da]), hi1 = std::max(e1.from[da], e1.to[da]);
        int lo2 = std::min(e2.from[db], e2.to[db]), hi2 = std::max(e2.from[db], e2.to[db]);
        if (lo1 < e2.from[da] && e2.from[da] < hi1 && lo2 < e1.from[db] && e1.from[db] < hi2) {
          if (e1.from[a] <= e2.from[a])
            throw CubeError("CrossingViolation(projection " + std::to_string(a) + ")");
        }
      }
    }
  }
  return c;
}

std::vector<LatticeEdge> knot_from_cube(const CubeDiagram& c) {
  std::vector<LatticeEdge> out;
  auto next_type = [](MarkType t) {
    return t == MarkType::X ? MarkType::Y : t == MarkType::Y ? MarkType::Z : MarkType::X;
  };
  for (const auto& m : c.markings) {
    MarkType want = next_type(m.t);
    const Marking* found = nullptr;
    int axis = -1;
    for (const auto& q : c.markings) {
      if (q.t != want) continue;
      int d = diff_axis(m.p, q.p);
      if (d >= 0) {
        if (found) throw CubeError("RightAngleViolation(ambiguous edge)");
        found = &q; axis = d;
      }
    }
    if (!found) throw CubeError("RightAngleViolation(missing edge partner)");
    out.push_back({m.p, found->p, axis});
  }
  return out;
}

Projection project(const CubeDiagram& c, int axis) {
  // out-z: grid X = pi(Z markings), grid O = pi(X); plane (col=x, row=y)
  // out-x: plane (col=y, row=z); grid X = pi(X), grid O = pi(Y)
  // out-y: plane (col=z, row=x); grid X = pi(Y), grid O = pi(Z)
  int col_axis, row_axis;
  MarkType xsrc, osrc;
  switch (axis) {
    case 2: col_axis = 0; row_axis = 1; xsrc = MarkType::Z; osrc = MarkType::X; break;
    case 0: col_axis = 1; row_axis = 2; xsrc = MarkType::X; osrc = MarkType::Y; break;
    case 1: col_axis = 2; row_axis = 0; xsrc = MarkType::Y; osrc = MarkType::Z; break;
    default: throw CubeError("project: bad axis");
  }
  std::vector<int> x(c.n, -1), o(c.n, -1);
  for (const auto& m : c.markings) {
    if (m.t == xsrc) x[m.p[row_axis]] = m.p[col_axis];
    else if (m.t == osrc) o[m.p[row_axis]] = m.p[col_axis];
  }
  Projection pr{make_grid(c.n, x, o), {}};
  auto edges = knot_from_cube(c);
  static const int over_axis[3] = {2, 0, 1};
  static const int under_axis[3] = {1, 2, 0};
  int da = over_axis[axis], db = under_axis[axis];
  for (const auto& e1 : edges) {
    if (e1.axis != da) continue;
    for (const auto& e2 : edges) {
      if (e2.axis != db) continue;
      int lo1 = std::min(e1.from[da], e1.to[da]), hi1 = std::max(e1.from[da], e1.to[da]);
      int lo2 = std::min(e2.from[db], e2.to[db]), hi2 = std::max(e2.from[db], e2.to[db]);
      if (lo1 < e2.from[da] && e2.from[da] < hi1 && lo2 < e1.from[db] && e1.from[db] < hi2) {
        // crossing cell in the projected grid
        std::array<int, 3> cell{};
        cell[da] = e2.from[da]; cell[db] = e1.from[db];
        pr.crossings.push_back({cell[row_axis], cell[col_axis], e1.from[axis], e2.from[axis]});
      }
    }
  }
  return pr;
}

std::string cube_to_json(const CubeDiagram& c) {
  nlohmann::ordered_json j;
  j["size"] = c.n;
  j["markings"] = nlohmann::ordered_json::array();
  for (const auto& m : c.markings) {
    nlohmann::ordered_json e;
    e["t"] = std::string(1, static_cast<char>(m.t));
    e["p"] = {m.p[0], m.p[1], m.p[2]};
    j["markings"].push_back(e);
  }
  return j.dump();
}

CubeDiagram cube_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  int n = j.at("size").get<int>();
  std::vector<Marking> mks;
  for (const auto& e : j.at("markings")) {
    std::string t = e.at("t").get<std::string>();
    if (t != "X" && t != "Y" && t != "Z") throw CubeError("json: bad marking type " + t);
    auto p = e.at("p");
    mks.push_back({static_cast<MarkType>(t[0]), {p.at(0).get<int>(), p.at(1).get<int>(), p.at(2).get<int>()}});
  }
  return validate_cube(n, std::move(mks));
}

}  // namespace cubik
