#include "cubik/lift.hpp"

#include <algorithm>
#include <array>

namespace cubik {

std::vector<Bend> x_bends(const Grid& g) {
  std::vector<Bend> out(g.n);
  for (int i = 0; i < g.n; ++i) {
    int c = g.x[i];
    int ro = g.orow(c);
    Bend& b = out[i];
    b.row = i; b.col = c;
    b.vlo = std::min(i, ro); b.vhi = std::max(i, ro);
    b.hlo = std::min(g.x[i], g.o[i]); b.hhi = std::max(g.x[i], g.o[i]);
    b.succ = ro;
    b.orow = ro; b.ocol = c;
  }
  return out;
}

BendOrder bend_order(const Grid& g) {
  BendOrder bo;
  for (const auto& cr : crossings(g))
    bo.edges.emplace_back(g.xrow(cr.col), cr.row);  // vertical's bend over horizontal's bend
  // cycle detection (iterative DFS coloring)
  std::vector<std::vector<int>> adj(g.n);
  for (auto [a, b] : bo.edges) adj[a].push_back(b);
  std::vector<int> state(g.n, 0);
  for (int s = 0; s < g.n && bo.acyclic; ++s) {
    if (state[s]) continue;
    std::vector<std::pair<int, size_t>> stack{{s, 0}};
    state[s] = 1;
    while (!stack.empty() && bo.acyclic) {
      auto& [v, idx] = stack.back();
      if (idx < adj[v].size()) {
        int w = adj[v][idx++];
        if (state[w] == 1) { bo.acyclic = false; break; }
        if (state[w] == 0) { state[w] = 1; stack.emplace_back(w, 0); }
      } else {
        state[v] = 2;
        stack.pop_back();
      }
    }
  }
  return bo;
}

std::vector<std::array<int, 3>> interval_constraints(const Grid& g) {
  auto bd = x_bends(g);
  std::vector<std::array<int, 3>> out;
  for (int r = 0; r < g.n; ++r) {
    int c = g.o[r];
    int b1 = g.xrow(c);  // bend whose vertical ends at this O
    int b2 = r;          // bend whose horizontal starts here
    for (int b = 0; b < g.n; ++b) {
      if (b == b1 || b == b2) continue;
      const Bend& d = bd[b];
      // (y,z)-projection: the O's z-edge vs the vertical of b, west side
      if (d.vlo < r && r < d.vhi && d.col > c) { out.push_back({b, b1, b2}); continue; }
      // (z,x)-projection: the z-edge vs the horizontal of b, below
      if (d.hlo < c && c < d.hhi && d.row < r) out.push_back({b, b1, b2});
    }
  }
  return out;
}

namespace {

struct LiftSearch {
  int n;
  std::vector<std::vector<int>> gt, lt;     // gt[a]: bends below a; lt[b]: bends above b
  std::vector<std::array<int, 3>> ic;
  std::vector<int> L;
  std::vector<char> used;

  explicit LiftSearch(const Grid& g) : n(g.n), gt(n), lt(n), L(n, -1), used(n, 0) {
    for (auto [a, b] : bend_order(g).edges) { gt[a].push_back(b); lt[b].push_back(a); }
    ic = interval_constraints(g);
  }

  bool ok(int i, int lev) const {
    for (int b : gt[i]) if (L[b] >= 0 && L[b] >= lev) return false;
    for (int b : lt[i]) if (L[b] >= 0 && L[b] <= lev) return false;
    for (const auto& [b, b1, b2] : ic) {
      int vb = b == i ? lev : L[b];
      int v1 = b1 == i ? lev : L[b1];
      int v2 = b2 == i ? lev : L[b2];
      if (vb < 0 || v1 < 0 || v2 < 0) continue;
      if (b != i && b1 != i && b2 != i) continue;  // unaffected by this choice
      if (std::min(v1, v2) < vb && vb < std::max(v1, v2)) return false;
    }
    return true;
  }

  bool rec(int i) {
    if (i == n) return true;
    for (int lev = 0; lev < n; ++lev) {
      if (used[lev] || !ok(i, lev)) continue;
      used[lev] = 1; L[i] = lev;
      if (rec(i + 1)) return true;
      used[lev] = 0; L[i] = -1;
    }
    return false;
  }
};

}  // namespace

std::vector<Marking> cube_from_assignment(const Grid& g, const std::vector<int>& levels) {
  std::vector<Marking> mks;
  mks.reserve(3 * g.n);
  for (int b = 0; b < g.n; ++b) {
    int k = levels[b], cb = g.x[b], rb = b;
    int r2 = g.orow(cb), c1 = g.o[rb];
    mks.push_back({MarkType::Z, {cb, rb, k}});
    mks.push_back({MarkType::Y, {c1, rb, k}});
    mks.push_back({MarkType::X, {cb, r2, k}});
  }
  return mks;
}

LiftResult lift(const Grid& g) {
  if (component_count(g) != 1) throw MultiComponentUnsupported("lift: multi-component grid");
  LiftResult res;
  if (!bend_order(g).acyclic) { res.fail = LiftFail::NoPartialOrder; return res; }
  LiftSearch s(g);
  if (!s.rec(0)) { res.fail = LiftFail::NoValidExtension; return res; }
  res.levels = s.L;
  res.cube = validate_cube(g.n, cube_from_assignment(g, s.L));
  return res;
}

bool lift_exists(const Grid& g) {
  if (component_count(g) != 1) throw MultiComponentUnsupported("lift_exists: multi-component grid");
  if (!bend_order(g).acyclic) return false;
  LiftSearch s(g);
  return s.rec(0);
}

}  // namespace cubik
