#include "cubik/obstruct.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cubik/lift.hpp"

namespace cubik {

namespace {

// shaded regions anchored at bend b0, open toward the grid boundary
bool in_hbad(const Bend& d, int r, int c) { return d.hlo < c && c < d.hhi && r > d.row; }
bool in_vbad(const Bend& d, int r, int c) { return d.vlo < r && r < d.vhi && c < d.col; }

// the (<=2) bend-paths u -> v along the knot whose interior avoids `avoid`;
// each result is the list of connecting O cells (row, col)
std::vector<std::vector<std::pair<int, int>>> arcs_between(const std::vector<Bend>& bd,
                                                           int u, int v, int avoid) {
  std::vector<std::vector<std::pair<int, int>>> out;
  for (auto [s, t] : {std::pair{u, v}, std::pair{v, u}}) {
    std::vector<std::pair<int, int>> cells;
    int b = s;
    bool okpath = true;
    while (b != t) {
      cells.emplace_back(bd[b].orow, bd[b].ocol);
      b = bd[b].succ;
      if (b == s) { okpath = false; break; }
      if (b != t && b == avoid) { okpath = false; break; }
    }
    if (okpath) out.push_back(std::move(cells));
  }
  return out;
}

}  // namespace

std::vector<ObstructionMatch> detect_type1(const Grid& g) {
  auto bd = x_bends(g);
  std::vector<std::set<int>> gt(g.n), lt(g.n);
  for (auto [a, b] : bend_order(g).edges) { gt[a].insert(b); lt[b].insert(a); }
  std::vector<ObstructionMatch> out;
  for (int b0 = 0; b0 < g.n; ++b0) {
    for (int ba : gt[b0]) {        // b0 crosses over ba
      for (int bb : lt[b0]) {      // bb crosses over b0
        if (ba == bb) continue;
        for (const auto& cells : arcs_between(bd, ba, bb, b0)) {
          bool h = true, v = true, u = true;
          for (auto [r, c] : cells) {
            bool ih = in_hbad(bd[b0], r, c), iv = in_vbad(bd[b0], r, c);
            h &= ih; v &= iv; u &= (ih || iv);
          }
          if (h) out.push_back({ObstructionKind::Type1a, b0, ba, bb, bd[b0].row, bd[b0].col});
          else if (v) out.push_back({ObstructionKind::Type1b, b0, ba, bb, bd[b0].row, bd[b0].col});
          else if (u) out.push_back({ObstructionKind::Type1c, b0, ba, bb, bd[b0].row, bd[b0].col});
        }
      }
    }
  }
  return out;
}

std::vector<ObstructionMatch> detect_type2(const Grid& g) {
  auto bd = x_bends(g);
  auto bo = bend_order(g);
  std::set<std::pair<int, int>> oe(bo.edges.begin(), bo.edges.end());
  std::vector<std::set<int>> lt(g.n);
  for (auto [a, b] : oe) lt[b].insert(a);
  // one case: assuming L[lowb] < L[anchor], find bb over anchor with an arc
  // lowb -> bb avoiding anchor whose O cells stay in anchor's bad region
  auto witness = [&](int lowb, int anchor) -> int {
    for (int bb : lt[anchor]) {
      if (bb == lowb) continue;
      for (const auto& cells : arcs_between(bd, lowb, bb, anchor)) {
        if (cells.empty()) continue;
        bool ok = true;
        for (auto [r, c] : cells)
          if (!in_hbad(bd[anchor], r, c) && !in_vbad(bd[anchor], r, c)) { ok = false; break; }
        if (ok) return bb;
      }
    }
    return -1;
  };
  std::vector<ObstructionMatch> out;
  for (int c0 = 0; c0 < g.n; ++c0) {
    for (int c1 = 0; c1 < g.n; ++c1) {
      if (c0 == c1 || oe.count({c0, c1}) || oe.count({c1, c0})) continue;
      int wa = witness(c1, c0);
      if (wa < 0) continue;
      int wb = witness(c0, c1);
      if (wb >= 0)
        out.push_back({ObstructionKind::Type2, c0, c1, wa, bd[c0].row, bd[c0].col});
    }
  }
  return out;
}

FilterVerdict filter(const Grid& g) {
  if (!bend_order(g).acyclic) return {Verdict::NoPartialOrder, {}};
  auto m1 = detect_type1(g);
  if (!m1.empty()) return {Verdict::Type1Found, std::move(m1)};
  auto m2 = detect_type2(g);
  if (!m2.empty()) return {Verdict::Type2Found, std::move(m2)};
  return {Verdict::Candidate, {}};
}

std::string verdict_line(const FilterVerdict& v) {
  std::ostringstream ss;
  switch (v.verdict) {
    case Verdict::NoPartialOrder: ss << "NoPartialOrder"; break;
    case Verdict::Type1Found: ss << "Type1Found"; break;
    case Verdict::Type2Found: ss << "Type2Found"; break;
    case Verdict::Candidate: ss << "Candidate"; break;
  }
  for (const auto& m : v.matches) {
    const char* k = m.kind == ObstructionKind::Type1a ? "1a"
                  : m.kind == ObstructionKind::Type1b ? "1b"
                  : m.kind == ObstructionKind::Type1c ? "1c" : "2";
    ss << " " << k << "@(" << m.row << "," << m.col << ")";
  }
  return ss.str();
}

}  // namespace cubik
