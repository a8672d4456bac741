#include "cubik/invariants.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace cubik {

namespace {

struct MiniUF {
  std::vector<int> p;
  explicit MiniUF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int a) { while (p[a] != a) a = p[a] = p[p[a]]; return a; }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

// delta = -A^2 - A^-2
Laurent delta_poly() {
  Laurent d;
  d.add(2, -1); d.add(-2, -1);
  return d;
}

using StateKey = std::uint64_t;  // 4 bits per frontier point: partner index

}  // namespace

Laurent kauffman_bracket(const Grid& g) {
  const int n = g.n;
  const Laurent delta = delta_poly();
  // horizontal spans
  std::vector<int> hmin(n), hmax(n);
  for (int r = 0; r < n; ++r) {
    hmin[r] = std::min(g.x[r], g.o[r]);
    hmax[r] = std::max(g.x[r], g.o[r]);
  }
  auto frontier = [&](int c) {  // rows whose horizontal crosses the line x = c
    std::vector<int> rows;
    for (int r = 0; r < n; ++r)
      if (hmin[r] < c && c <= hmax[r]) rows.push_back(r);
    return rows;
  };

  std::unordered_map<StateKey, Laurent> states;
  states[0] = Laurent(1);

  std::vector<int> lidx(n, -1), ridx(n, -1);
  for (int c = 0; c < n; ++c) {
    auto Lr = frontier(c), Rr = frontier(c + 1);
    const int NL = (int)Lr.size(), NR = (int)Rr.size();
    std::fill(lidx.begin(), lidx.end(), -1);
    std::fill(ridx.begin(), ridx.end(), -1);
    for (int i = 0; i < NL; ++i) lidx[Lr[i]] = i;
    for (int j = 0; j < NR; ++j) ridx[Rr[j]] = j;

    const int rx = g.xrow(c), ro = g.orow(c);
    const int rlo = std::min(rx, ro), rhi = std::max(rx, ro);
    std::vector<int> crossRows, throughRows;
    for (int r = 0; r < n; ++r) {
      if (!(hmin[r] < c && c < hmax[r])) continue;
      if (rlo < r && r < rhi) crossRows.push_back(r);
      else throughRows.push_back(r);
    }
    const int K = (int)crossRows.size();
    const int NC = 2 * K + 2;                  // vertical chain nodes
    const int total = NL + NR + NC;
    auto chain = [&](int t) { return NL + NR + t; };
    auto right = [&](int r) { return NL + ridx[r]; };
    // stub attachment for the vertical's two end rows
    auto stub_node = [&](int r) {
      int other = (r == rx) ? g.o[r] : g.x[r];  // horizontal partner column
      return other < c ? lidx[r] : right(r);
    };

    std::unordered_map<StateKey, Laurent> next;
    next.reserve(states.size() * 2);
    for (const auto& [key, poly] : states) {
      for (int mask = 0; mask < (1 << K); ++mask) {
        MiniUF uf(total);
        // incoming pairing
        for (int i = 0; i < NL; ++i) uf.unite(i, (int)((key >> (4 * i)) & 0xf));
        // vertical chain segments between events
        for (int t = 0; t <= K; ++t) uf.unite(chain(2 * t), chain(2 * t + 1));
        uf.unite(chain(0), stub_node(rlo));
        uf.unite(chain(2 * K + 1), stub_node(rhi));
        for (int r : throughRows) uf.unite(lidx[r], right(r));
        int na = 0, nb = 0;
        for (int t = 0; t < K; ++t) {
          int r = crossRows[t];
          int below = chain(2 * t + 1), above = chain(2 * t + 2);
          if (mask >> t & 1) {  // A: {N,E},{S,W}
            ++na;
            uf.unite(above, right(r));
            uf.unite(below, lidx[r]);
          } else {              // B: {N,W},{S,E}
            ++nb;
            uf.unite(above, lidx[r]);
            uf.unite(below, right(r));
          }
        }
        // new pairing + closed-loop count
        StateKey nk = 0;
        std::vector<int> rep(total, -1);
        for (int j = 0; j < NR; ++j) {
          int root = uf.find(NL + j);
          if (rep[root] < 0) rep[root] = j;
          else {
            nk |= StateKey(rep[root]) << (4 * j);
            nk |= StateKey(j) << (4 * rep[root]);
          }
        }
        int comps = 0;
        std::vector<char> seen(total, 0);
        for (int v = 0; v < total; ++v) {
          int root = uf.find(v);
          if (!seen[root]) { seen[root] = 1; ++comps; }
        }
        int loops = comps - NR / 2;
        Laurent term = poly * Laurent::monomial(na - nb, 1);
        for (int l = 0; l < loops; ++l) term *= delta;
        auto it = next.find(nk);
        if (it == next.end()) next.emplace(nk, std::move(term));
        else it->second += term;
      }
    }
    states = std::move(next);
  }
  // frontier is empty after the last column
  Laurent out;
  for (auto& [key, poly] : states) out += poly;
  return out.divide_exact(delta);  // <unknot> = 1
}

Laurent jones(const Grid& g) {
  Laurent br = kauffman_bracket(g);
  int w = writhe(g);
  Laurent out;
  for (auto [e, c] : br.terms()) {
    int ee = e - 3 * w;
    std::int64_t cf = (3 * w) % 2 == 0 ? c : -c;
    if (ee % 4 != 0)
      throw NonIntegralExponent("jones: A-exponent " + std::to_string(ee) + " not divisible by 4");
    out.add(-ee / 4, cf);
  }
  return out;
}

LegendrianData legendrian_data(const Grid& g) {
  LegendrianData d;
  for (int r = 0; r < g.n; ++r) {
    int cx = g.x[r], co = g.o[r];
    int ro = g.orow(cx);  // far row of the vertical at the X corner
    if (co > cx && ro < r) ++d.down_cusps;       // NW corner, strand heading down
    else if (co < cx && ro > r) ++d.up_cusps;    // SE corner, strand heading up
    int rxr = g.xrow(co);
    if (rxr > r && cx < co) ++d.down_cusps;      // SE corner at the O
    else if (rxr < r && cx > co) ++d.up_cusps;   // NW corner at the O
  }
  d.writhe = writhe(g);
  d.right_cusps = (d.down_cusps + d.up_cusps) / 2;
  d.tb = d.writhe - d.right_cusps;
  d.r = (d.down_cusps - d.up_cusps) / 2;
  return d;
}

KnotTable KnotTable::parse(const std::string& text) {
  KnotTable t;
  std::istringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    KnotRecord rec;
    std::string alpha_s, poly_s;
    if (!std::getline(ls, rec.name, ';') || !std::getline(ls, alpha_s, ';') || !std::getline(ls, poly_s))
      throw std::runtime_error("knot table: bad line: " + line);
    auto trim = [](std::string& s) {
      s.erase(0, s.find_first_not_of(" \t"));
      s.erase(s.find_last_not_of(" \t") + 1);
    };
    trim(rec.name); trim(alpha_s); trim(poly_s);
    rec.alpha = std::stoi(alpha_s);
    std::istringstream ps(poly_s);
    std::string term;
    while (std::getline(ps, term, ',')) {
      auto colon = term.find(':');
      if (colon == std::string::npos) throw std::runtime_error("knot table: bad term " + term);
      rec.fingerprint.add(std::stoi(term.substr(0, colon)), std::stoll(term.substr(colon + 1)));
    }
    t.records.push_back(std::move(rec));
  }
  for (size_t i = 0; i < t.records.size(); ++i)
    for (size_t j = i + 1; j < t.records.size(); ++j)
      if (t.records[i].fingerprint == t.records[j].fingerprint)
        throw std::runtime_error("AmbiguousFingerprint(" + t.records[i].name + ", " + t.records[j].name + ")");
  return t;
}

std::string KnotTable::serialize() const {
  std::ostringstream ss;
  for (const auto& r : records)
    ss << r.name << "; " << r.alpha << "; " << r.fingerprint.serialize() << '\n';
  return ss.str();
}

const KnotRecord* KnotTable::identify(const Laurent& jones_poly) const {
  for (const auto& r : records)
    if (r.fingerprint == jones_poly) return &r;
  return nullptr;
}

KnotTable KnotTable::builtin() {
  // Jones fingerprints frozen from reference torus-knot grids
  // (x = identity, o = shift): left-handed versions, plus mirrors.
  static const char* kTable =
      "unknot; 2; 0:1\n"
      "trefoil_left; 5; -4:-1,-3:1,-1:1\n"
      "trefoil_right; 5; 1:1,3:1,4:-1\n"
      "torus_5_2_left; 7; -7:-1,-6:1,-5:-1,-4:1,-2:1\n"
      "torus_5_2_right; 7; 2:1,4:1,5:-1,6:1,7:-1\n"
      "torus_7_2_left; 9; -10:-1,-9:1,-8:-1,-7:1,-6:-1,-5:1,-3:1\n"
      "torus_7_2_right; 9; 3:1,5:1,6:-1,7:1,8:-1,9:1,10:-1\n"
      "8_19_left; 7; -8:-1,-5:1,-3:1\n"
      "8_19_right; 7; 3:1,5:1,8:-1\n"
      "10_124_left; 8; -10:-1,-6:1,-4:1\n"
      "10_124_right; 8; 4:1,6:1,10:-1\n";
  return parse(kTable);
}

const KnotRecord* identify(const Grid& g, const KnotTable& table) {
  return table.identify(jones(g));
}

std::set<int> max_tb_rotation_set(int p) {
  std::set<int> s;
  for (int t = 0; 2 * t < p - 2; ++t) { s.insert(p - 2 - 4 * t); s.insert(-(p - 2 - 4 * t)); }
  return s;
}

Grid standard_diagram(int p, int j, int k) {
  if (p < 3 || p % 2 == 0 || j < 1 || k < 1 || j + k != p)
    throw GridError("InvalidParams(p=" + std::to_string(p) + ",j=" + std::to_string(j) +
                    ",k=" + std::to_string(k) + ")");
  if (j > k) return swap_xo(standard_diagram(p, k, j));
  const int n = p + 2;
  std::vector<int> x(n), o(n);
  std::iota(x.begin(), x.end(), 0);
  if (j == 1) {
    // translate with o = identity; this representative lifts
    for (int r = 0; r < n; ++r) { x[r] = (r + n - 2) % n; o[r] = r; }
    return Grid(n, x, o);
  }
  // rows 2..n-3 rotated left by j-1, o = shift by j+1
  std::vector<int> blk(x.begin() + 2, x.begin() + (n - 2));
  std::rotate(blk.begin(), blk.begin() + (j - 1), blk.end());
  std::copy(blk.begin(), blk.end(), x.begin() + 2);
  for (int r = 0; r < n; ++r) o[r] = (r + j + 1) % n;
  return Grid(n, x, o);
}

}  // namespace cubik
