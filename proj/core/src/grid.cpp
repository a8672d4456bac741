#include "cubik/grid.hpp"

#include <algorithm>
#include <sstream>

namespace cubik {

Grid::Grid(int n_, std::vector<int> x_, std::vector<int> o_)
    : n(n_), x(std::move(x_)), o(std::move(o_)), xr(n_, -1), orr(n_, -1) {
  for (int r = 0; r < n; ++r) { xr[x[r]] = r; orr[o[r]] = r; }
}

Grid make_grid(int n, const std::vector<int>& x, const std::vector<int>& o) {
  if (n < 1 || (int)x.size() != n || (int)o.size() != n)
    throw GridError("NotAPermutation(size mismatch)");
  auto check = [&](const std::vector<int>& v, const char* which) {
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
      if (v[i] < 0 || v[i] >= n || seen[v[i]])
        throw GridError(std::string("NotAPermutation(") + which + ", index " + std::to_string(i) + ")");
      seen[v[i]] = 1;
    }
  };
  check(x, "X"); check(o, "O");
  for (int r = 0; r < n; ++r)
    if (x[r] == o[r]) throw GridError("SharedCell(row " + std::to_string(r) + ")");
  return Grid(n, x, o);
}

GridKey grid_key(const Grid& g) {
  GridKey k;
  for (int r = 0; r < g.n; ++r) {
    k.a |= std::uint64_t(g.x[r]) << (4 * r);
    k.b |= std::uint64_t(g.o[r]) << (4 * r);
  }
  return k;
}

std::vector<Segment> segments(const Grid& g) {
  std::vector<Segment> out;
  out.reserve(2 * g.n);
  for (int c = 0; c < g.n; ++c)               // verticals: X -> O
    out.push_back({true, c, g.xrow(c), g.orow(c)});
  for (int r = 0; r < g.n; ++r)               // horizontals: O -> X
    out.push_back({false, r, g.o[r], g.x[r]});
  return out;
}

std::vector<Crossing> crossings(const Grid& g) {
  std::vector<Crossing> out;
  for (int c = 0; c < g.n; ++c) {
    int rx = g.xrow(c), ro = g.orow(c);
    int lo = std::min(rx, ro), hi = std::max(rx, ro);
    for (int r = lo + 1; r < hi; ++r) {
      int a = std::min(g.x[r], g.o[r]), b = std::max(g.x[r], g.o[r]);
      if (a < c && c < b) {
        int vy = ro > rx ? 1 : -1;            // over (vertical) direction
        int ux = g.x[r] > g.o[r] ? 1 : -1;    // under (horizontal) direction
        out.push_back({r, c, -vy * ux});      // det[(0,vy),(ux,0)]
      }
    }
  }
  return out;
}

int writhe(const Grid& g) {
  int w = 0;
  for (const auto& c : crossings(g)) w += c.sign;
  return w;
}

int component_count(const Grid& g) {
  std::vector<char> seen(g.n, 0);
  int comps = 0;
  for (int r0 = 0; r0 < g.n; ++r0) {
    if (seen[r0]) continue;
    ++comps;
    for (int r = r0; !seen[r]; r = g.orow(g.x[r])) seen[r] = 1;
  }
  return comps;
}

Grid mirror(const Grid& g) {
  std::vector<int> x(g.n), o(g.n);
  for (int r = 0; r < g.n; ++r) { x[r] = g.n - 1 - g.x[r]; o[r] = g.n - 1 - g.o[r]; }
  return Grid(g.n, x, o);
}

Grid swap_xo(const Grid& g) { return Grid(g.n, g.o, g.x); }

std::string print_grid(const Grid& g) {
  std::ostringstream ss;
  ss << "grid " << g.n << "\nX:";
  for (int c : g.x) ss << ' ' << c;
  ss << "\nO:";
  for (int c : g.o) ss << ' ' << c;
  ss << '\n';
  return ss.str();
}

Grid parse_grid(const std::string& text) {
  std::istringstream ss(text);
  std::string tok;
  int n = 0;
  if (!(ss >> tok) || tok != "grid" || !(ss >> n) || n < 1)
    throw GridError("parse: expected 'grid <n>'");
  auto read_row = [&](const char* label) {
    if (!(ss >> tok) || tok != label) throw GridError(std::string("parse: expected '") + label + "'");
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i)
      if (!(ss >> v[i])) throw GridError("parse: short row");
    return v;
  };
  auto x = read_row("X:");
  auto o = read_row("O:");
  return make_grid(n, x, o);
}

}  // namespace cubik
