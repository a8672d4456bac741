#include "cubik/moves.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "cubik/engine.hpp"
#include "cubik/lift.hpp"

namespace cubik {

namespace {

// adjacent rows (or columns) i, i+1 mod n: commutation is defined only when
// the four marking coordinates are distinct and do not alternate
bool commutable(int a1, int a2, int b1, int b2) {
  if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) return false;
  struct P { int v; bool first; };
  P ps[4] = {{a1, true}, {a2, true}, {b1, false}, {b2, false}};
  std::sort(ps, ps + 4, [](const P& x, const P& y) { return x.v < y.v; });
  bool interleaved = ps[0].first != ps[1].first && ps[1].first != ps[2].first &&
                     ps[2].first != ps[3].first;
  return !interleaved;
}

}  // namespace

bool move_legal(const Grid& g, const Move& m) {
  int n = g.n, i = ((m.index % n) + n) % n, j = (i + 1) % n;
  switch (m.kind) {
    case MoveKind::CommuteRows:
      return commutable(g.x[i], g.o[i], g.x[j], g.o[j]);
    case MoveKind::CommuteCols:
      return commutable(g.xrow(i), g.orow(i), g.xrow(j), g.orow(j));
    default:
      return true;
  }
}

Grid apply_move(const Grid& g, const Move& m) {
  const int n = g.n;
  int i = ((m.index % n) + n) % n, j = (i + 1) % n;
  std::vector<int> x = g.x, o = g.o;
  switch (m.kind) {
    case MoveKind::CyclicUp:
      for (int r = 0; r < n; ++r) { x[r] = g.x[(r - 1 + n) % n]; o[r] = g.o[(r - 1 + n) % n]; }
      break;
    case MoveKind::CyclicDown:
      for (int r = 0; r < n; ++r) { x[r] = g.x[(r + 1) % n]; o[r] = g.o[(r + 1) % n]; }
      break;
    case MoveKind::CyclicLeft:
      for (int r = 0; r < n; ++r) { x[r] = (g.x[r] - 1 + n) % n; o[r] = (g.o[r] - 1 + n) % n; }
      break;
    case MoveKind::CyclicRight:
      for (int r = 0; r < n; ++r) { x[r] = (g.x[r] + 1) % n; o[r] = (g.o[r] + 1) % n; }
      break;
    case MoveKind::CommuteRows:
      if (!move_legal(g, m)) throw InterleavedPair("CommuteRows(" + std::to_string(i) + ")");
      std::swap(x[i], x[j]);
      std::swap(o[i], o[j]);
      break;
    case MoveKind::CommuteCols: {
      if (!move_legal(g, m)) throw InterleavedPair("CommuteCols(" + std::to_string(i) + ")");
      for (int r = 0; r < n; ++r) {
        if (x[r] == i) x[r] = j; else if (x[r] == j) x[r] = i;
        if (o[r] == i) o[r] = j; else if (o[r] == j) o[r] = i;
      }
      break;
    }
  }
  return Grid(n, x, o);
}

Grid grid_from_key(int n, const GridKey& k) {
  std::vector<int> x(n), o(n);
  for (int r = 0; r < n; ++r) {
    x[r] = (int)((k.a >> (4 * r)) & 0xf);
    o[r] = (int)((k.b >> (4 * r)) & 0xf);
  }
  return Grid(n, x, o);
}

namespace {

template <typename F>
void for_each_move_image(const Grid& g, bool cyclic_only, const F& f) {
  f(apply_move(g, {MoveKind::CyclicUp}));
  f(apply_move(g, {MoveKind::CyclicDown}));
  f(apply_move(g, {MoveKind::CyclicLeft}));
  f(apply_move(g, {MoveKind::CyclicRight}));
  if (cyclic_only) return;
  for (int i = 0; i < g.n; ++i) {
    for (MoveKind k : {MoveKind::CommuteRows, MoveKind::CommuteCols}) {
      Move m{k, i};
      if (move_legal(g, m)) f(apply_move(g, m));
    }
  }
}

GridSet closure(const Grid& g, bool cyclic_only) {
  GridSet seen;
  std::vector<Grid> frontier{g};
  seen.insert(grid_key(g));
  while (!frontier.empty()) {
    std::vector<Grid> next;
    for (const Grid& h : frontier)
      for_each_move_image(h, cyclic_only, [&](const Grid& m) {
        if (seen.insert(grid_key(m)).second) next.push_back(m);
      });
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

GridSet cyclic_orbit(const Grid& g) { return closure(g, true); }

OrbitReport reachability_class(const Grid& g, bool check_invariants) {
  OrbitReport rep{g, closure(g, false), {}};
  if (check_invariants) {
    auto ld0 = legendrian_data(g);
    Laurent j0 = jones(g);
    for (const auto& k : rep.reached) {
      Grid h = grid_from_key(g.n, k);
      auto ld = legendrian_data(h);
      if (ld.tb != ld0.tb || ld.r != ld0.r || !(jones(h) == j0))
        rep.invariant_violations.push_back(h);
    }
  }
  return rep;
}

CensusResult legendrian_census(int n, const KnotTable& table, int threads) {
  CensusResult result;
  result.n = n;
  using Key = std::tuple<std::string, int, int>;
  auto fpid = [&](const Laurent& j) {
    std::string s = j.serialize();
    std::replace(s.begin(), s.end(), ',', ';');
    if (const KnotRecord* rec = table.identify(j)) return rec->name + "|" + s;
    return "unknown|" + s;
  };
  auto shards = shard_space(n, n >= 3 ? 1 : 0);
  std::vector<std::map<Key, CensusBucket>> partial(shards.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= shards.size()) return;
      EnumSpec spec = shards[i];
      spec.use_filters = true;
      spec.do_lift = true;
      auto& local = partial[i];
      enumerate_grids(spec, [&](const Grid& g, Verdict, const LiftResult* lr) {
        auto ld = legendrian_data(g);
        Key key{fpid(jones(g)), ld.tb, ld.r};
        CensusBucket& b = local[key];
        if (b.count == 0) {
          b.fingerprint_id = std::get<0>(key);
          b.tb = ld.tb;
          b.r = ld.r;
        }
        ++b.count;
        if (lr && lr->ok()) ++b.lifts_found;
        b.members.push_back(grid_key(g));
      });
    }
  };
  int nthreads = resolve_threads(threads);
  std::vector<std::thread> pool;
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (auto& local : partial)
    for (auto& [key, b] : local) {
      CensusBucket& dst = result.buckets[key];
      if (dst.count == 0) { dst.fingerprint_id = b.fingerprint_id; dst.tb = b.tb; dst.r = b.r; }
      dst.count += b.count;
      dst.lifts_found += b.lifts_found;
      dst.members.insert(dst.members.end(), b.members.begin(), b.members.end());
    }
  // classes: BFS inside each bucket; a move leading out of the bucket would
  // contradict move-invariance of (fingerprint, tb, r) and is counted too
  for (auto& [key, b] : result.buckets) {
    std::sort(b.members.begin(), b.members.end());
    auto member_index = [&](const GridKey& k) -> std::int64_t {
      auto it = std::lower_bound(b.members.begin(), b.members.end(), k);
      if (it == b.members.end() || !(*it == k)) return -1;
      return it - b.members.begin();
    };
    std::vector<char> visited(b.members.size(), 0);
    for (size_t s = 0; s < b.members.size(); ++s) {
      if (visited[s]) continue;
      ++b.num_classes;
      std::vector<std::int64_t> stack{(std::int64_t)s};
      visited[s] = 1;
      while (!stack.empty()) {
        auto idx = stack.back();
        stack.pop_back();
        Grid h = grid_from_key(n, b.members[idx]);
        for_each_move_image(h, false, [&](const Grid& m) {
          auto mi = member_index(grid_key(m));
          if (mi >= 0 && !visited[mi]) { visited[mi] = 1; stack.push_back(mi); }
        });
      }
    }
  }
  return result;
}

std::string census_csv(const CensusResult& c) {
  std::ostringstream ss;
  ss << "fingerprint_id,tb,r,count,num_classes,lifts_found\n";
  for (const auto& [key, b] : c.buckets)
    ss << b.fingerprint_id << ',' << b.tb << ',' << b.r << ',' << b.count << ','
       << b.num_classes << ',' << b.lifts_found << '\n';
  return ss.str();
}

}  // namespace cubik
