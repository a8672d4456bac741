#include "cubik/render.hpp"

#include <algorithm>
#include <sstream>

#include "cubik/invariants.hpp"

namespace cubik {

std::string render_grid_ascii(const Grid& g) {
  std::ostringstream ss;
  for (int r = g.n - 1; r >= 0; --r) {
    for (int c = 0; c < g.n; ++c) {
      if (g.x[r] == c) ss << 'X';
      else if (g.o[r] == c) ss << 'O';
      else ss << '.';
      if (c + 1 < g.n) ss << ' ';
    }
    ss << '\n';
  }
  return ss.str();
}

namespace {

constexpr int kCell = 40, kPad = 30;

int px(int c) { return kPad + c * kCell + kCell / 2; }

int py(const Grid& g, int r) { return kPad + (g.n - 1 - r) * kCell + kCell / 2; }

}  // namespace

std::string render_grid_svg(const Grid& g) {
  int size = 2 * kPad + g.n * kCell;
  std::ostringstream ss;
  ss << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
     << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
  for (int i = 0; i <= g.n; ++i) {
    int v = kPad + i * kCell;
    ss << "<line x1=\"" << v << "\" y1=\"" << kPad << "\" x2=\"" << v << "\" y2=\""
       << kPad + g.n * kCell << "\" stroke=\"#ddd\"/>\n";
    ss << "<line x1=\"" << kPad << "\" y1=\"" << v << "\" x2=\"" << kPad + g.n * kCell
       << "\" y2=\"" << v << "\" stroke=\"#ddd\"/>\n";
  }
  // horizontals first so the (over) verticals paint on top
  for (int r = 0; r < g.n; ++r)
    ss << "<line x1=\"" << px(g.o[r]) << "\" y1=\"" << py(g, r) << "\" x2=\"" << px(g.x[r])
       << "\" y2=\"" << py(g, r) << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  for (int c = 0; c < g.n; ++c)
    ss << "<line x1=\"" << px(c) << "\" y1=\"" << py(g, g.xrow(c)) << "\" x2=\"" << px(c)
       << "\" y2=\"" << py(g, g.orow(c)) << "\" stroke=\"black\" stroke-width=\"5\""
       << " stroke-linecap=\"round\"/>\n";
  for (int r = 0; r < g.n; ++r) {
    ss << "<circle cx=\"" << px(g.x[r]) << "\" cy=\"" << py(g, r)
       << "\" r=\"7\" fill=\"#c33\"/>\n";
    ss << "<circle cx=\"" << px(g.o[r]) << "\" cy=\"" << py(g, r)
       << "\" r=\"7\" fill=\"white\" stroke=\"black\"/>\n";
  }
  // cusp corners of the front (NW/SE corners)
  for (int r = 0; r < g.n; ++r) {
    int cx = g.x[r], co = g.o[r];
    bool xc = (co > cx && g.orow(cx) < r) || (co < cx && g.orow(cx) > r);
    bool oc = (g.xrow(co) > r && cx < co) || (g.xrow(co) < r && cx > co);
    if (xc)
      ss << "<circle cx=\"" << px(cx) << "\" cy=\"" << py(g, r)
         << "\" r=\"11\" fill=\"none\" stroke=\"#38f\" stroke-width=\"2\"/>\n";
    if (oc)
      ss << "<circle cx=\"" << px(co) << "\" cy=\"" << py(g, r)
         << "\" r=\"11\" fill=\"none\" stroke=\"#38f\" stroke-width=\"2\"/>\n";
  }
  ss << "</svg>\n";
  return ss.str();
}

std::string render_cube_ascii(const CubeDiagram& c) {
  std::ostringstream ss;
  for (int k = 0; k < c.n; ++k) {
    ss << "z=" << k << '\n';
    for (int j = c.n - 1; j >= 0; --j) {
      for (int i = 0; i < c.n; ++i) {
        char ch = '.';
        for (const auto& m : c.markings)
          if (m.p[0] == i && m.p[1] == j && m.p[2] == k) ch = (char)m.t;
        ss << ch;
        if (i + 1 < c.n) ss << ' ';
      }
      ss << '\n';
    }
  }
  return ss.str();
}

std::string render_cube_svg(const CubeDiagram& c) {
  // isometric: (i,j,k) -> (x + 0.5 y', ...) with y into the page diagonal
  auto ix = [&](std::array<int, 3> p) { return 60 + p[0] * 40 + p[1] * 18; };
  auto iy = [&](std::array<int, 3> p) { return 60 + (c.n - 1 - p[2]) * 40 + p[1] * 12; };
  int w = 120 + c.n * 40 + c.n * 18, h = 120 + c.n * 40 + c.n * 12;
  std::ostringstream ss;
  ss << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
     << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
  for (const auto& e : knot_from_cube(c))
    ss << "<line x1=\"" << ix(e.from) << "\" y1=\"" << iy(e.from) << "\" x2=\"" << ix(e.to)
       << "\" y2=\"" << iy(e.to) << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  for (const auto& m : c.markings) {
    const char* fill = m.t == MarkType::X ? "#c33" : m.t == MarkType::Y ? "#3a3" : "#38f";
    ss << "<circle cx=\"" << ix(m.p) << "\" cy=\"" << iy(m.p) << "\" r=\"5\" fill=\"" << fill
       << "\"/>\n";
  }
  ss << "</svg>\n";
  return ss.str();
}

}  // namespace cubik
