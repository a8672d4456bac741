#pragma once
// Kauffman bracket / Jones polynomial, Legendrian invariants, knot table,
// and the standard torus-knot diagrams G_{j,k}.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cubik/grid.hpp"
#include "cubik/laurent.hpp"

namespace cubik {

// Bracket in the variable A, normalized so <unknot> = 1.
// Planar column sweep whose states are non-crossing matchings of the open
// horizontal strands, so the cost is polynomial-ish per column instead of
// the 2^crossings global state sum.
Laurent kauffman_bracket(const Grid& g);

struct NonIntegralExponent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// V(t) = (-A)^(-3w) <G> with t = A^-4. Throws NonIntegralExponent when the
// A-exponents are not multiples of 4 (links).
Laurent jones(const Grid& g);

struct LegendrianData {
  int writhe = 0;
  int down_cusps = 0;  // D_c
  int up_cusps = 0;    // U_c
  int right_cusps = 0; // half the total cusp count
  int tb = 0;          // writhe - (D_c + U_c)/2
  int r = 0;           // (D_c - U_c)/2
};

// Front = smooth NE/SW corners, cusp NW/SE corners, rotate 45 degrees.
LegendrianData legendrian_data(const Grid& g);

struct KnotRecord {
  std::string name;
  int alpha = 0;       // arc index
  Laurent fingerprint; // Jones in t
};

struct KnotTable {
  std::vector<KnotRecord> records;
  // throws on duplicate fingerprints (AmbiguousFingerprint)
  static KnotTable parse(const std::string& text);
  static KnotTable builtin();  // bundled torus-knot table
  std::string serialize() const;
  const KnotRecord* identify(const Laurent& jones_poly) const;
};

const KnotRecord* identify(const Grid& g, const KnotTable& table);  // null = Unknown

// {+-(p - 2 - 4t) : 0 <= t < (p-2)/2}
std::set<int> max_tb_rotation_set(int p);

// Standard diagram G_{j,k}, j + k = p odd, size p+2: left-hand (p,2) torus
// knot with j and k crossings on two diagonals and rotation number k - j.
// j == 1 uses the translate with o = identity (the one that lifts);
// j > k is the X/O swap of G_{k,j}.
Grid standard_diagram(int p, int j, int k);  // throws GridError(InvalidParams)

}  // namespace cubik
