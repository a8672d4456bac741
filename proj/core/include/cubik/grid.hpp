#pragma once
// Grid diagrams: n x n, one X and one O per row and column.
// Rows are indexed bottom-to-top, columns left-to-right; markings sit at cell
// centers, so every horizontal/vertical intersection is transversal.
// Vertical segments run X -> O, horizontals O -> X, and verticals always
// cross over horizontals.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubik {

struct GridError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Grid {
  int n = 0;
  std::vector<int> x;  // x[r] = column of the X marking in row r
  std::vector<int> o;  // o[r] = column of the O marking in row r
  std::vector<int> xr; // xr[c] = row of the X marking in column c
  std::vector<int> orr; // orr[c] = row of the O marking in column c

  Grid() = default;
  Grid(int n_, std::vector<int> x_, std::vector<int> o_);

  int xrow(int c) const { return xr[c]; }
  int orow(int c) const { return orr[c]; }

  bool operator==(const Grid& g) const { return n == g.n && x == g.x && o == g.o; }
};

// Packed key for hash sets; 4 bits per entry, n <= 16.
struct GridKey {
  std::uint64_t a = 0, b = 0;
  bool operator==(const GridKey& k) const { return a == k.a && b == k.b; }
  bool operator<(const GridKey& k) const { return a != k.a ? a < k.a : b < k.b; }
};
GridKey grid_key(const Grid& g);

struct GridKeyHash {
  std::size_t operator()(const GridKey& k) const {
    std::uint64_t h = k.a * 0x9e3779b97f4a7c15ULL ^ (k.b + 0x7f4a7c159e3779b9ULL);
    h ^= h >> 29; h *= 0xbf58476d1ce4e5b9ULL; h ^= h >> 32;
    return static_cast<std::size_t>(h);
  }
};

struct Segment {
  bool vertical;       // vertical: X -> O along a column; horizontal: O -> X along a row
  int fixed;           // column for verticals, row for horizontals
  int from, to;        // span endpoints in the varying coordinate, oriented
  int dir() const { return to > from ? 1 : -1; }
  int lo() const { return from < to ? from : to; }
  int hi() const { return from < to ? to : from; }
};

struct Crossing {
  int row, col;        // cell of the intersection
  int sign;            // det[over_dir, under_dir]; over is always the vertical
};

// throws GridError with NotAPermutation(...)/SharedCell(...) text
Grid make_grid(int n, const std::vector<int>& x, const std::vector<int>& o);

std::vector<Segment> segments(const Grid& g);   // 2n segments, verticals first
std::vector<Crossing> crossings(const Grid& g); // sorted by (col, row)
int writhe(const Grid& g);
int component_count(const Grid& g);
Grid mirror(const Grid& g);                     // column reflection c -> n-1-c
Grid swap_xo(const Grid& g);

// Grid text format: "grid <n>\nX: c0 ... c(n-1)\nO: c0 ...\n"
std::string print_grid(const Grid& g);
Grid parse_grid(const std::string& text);       // throws GridError

}  // namespace cubik
