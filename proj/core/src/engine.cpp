#include "cubik/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <thread>

#include "cubik/cube.hpp"

namespace cubik {

void EnumStats::merge(const EnumStats& s) {
  visited += s.visited;
  single_component += s.single_component;
  for (int i = 0; i < 4; ++i) verdicts[i] += s.verdicts[i];
  lifted += s.lifted;
  xperms_done += s.xperms_done;
}

std::string EnumStats::serialize() const {
  std::ostringstream ss;
  ss << visited << ' ' << single_component;
  for (int i = 0; i < 4; ++i) ss << ' ' << verdicts[i];
  ss << ' ' << lifted << ' ' << xperms_done;
  return ss.str();
}

EnumStats EnumStats::deserialize(const std::string& line) {
  EnumStats s;
  std::istringstream ss(line);
  ss >> s.visited >> s.single_component;
  for (int i = 0; i < 4; ++i) ss >> s.verdicts[i];
  ss >> s.lifted >> s.xperms_done;
  return s;
}

namespace {

// recursive lex generation of o with o[r] != x[r]
template <typename F>
void gen_o(const std::vector<int>& x, std::vector<int>& o, std::vector<char>& used, int r,
           const F& f) {
  const int n = (int)x.size();
  if (r == n) { f(); return; }
  for (int v = 0; v < n; ++v) {
    if (used[v] || v == x[r]) continue;
    used[v] = 1; o[r] = v;
    gen_o(x, o, used, r + 1, f);
    used[v] = 0;
  }
}

bool single_component(const Grid& g) { return component_count(g) == 1; }

}  // namespace

EnumStats enumerate_grids(const EnumSpec& spec, const VisitFn& consumer,
                          const ProgressFn& progress) {
  const int n = spec.n;
  EnumStats stats;
  // x permutations with the shard prefix, lex order
  std::vector<int> rest;
  for (int v = 0; v < n; ++v)
    if (std::find(spec.prefix.begin(), spec.prefix.end(), v) == spec.prefix.end())
      rest.push_back(v);
  std::sort(rest.begin(), rest.end());
  std::vector<int> x(spec.prefix);
  x.resize(n);
  std::uint64_t xrank = 0;
  bool stop = false;
  do {
    std::copy(rest.begin(), rest.end(), x.begin() + spec.prefix.size());
    ++xrank;
    if (xrank <= spec.resume_xrank) continue;
    std::vector<int> o(n);
    std::vector<char> used(n, 0);
    gen_o(x, o, used, 0, [&] {
      ++stats.visited;
      Grid g(n, x, o);
      if (spec.knots_only && !single_component(g)) return;
      ++stats.single_component;
      Verdict v = Verdict::Candidate;
      if (spec.use_filters) v = filter(g).verdict;
      ++stats.verdicts[(int)v];
      const LiftResult* lr = nullptr;
      LiftResult res;
      if (spec.do_lift && v == Verdict::Candidate) {
        res = lift(g);
        lr = &res;
        if (res.ok()) ++stats.lifted;
      }
      if (consumer) consumer(g, v, lr);
    });
    ++stats.xperms_done;
    if (progress && !progress(xrank, stats)) { stop = true; break; }
  } while (std::next_permutation(rest.begin(), rest.end()));
  (void)stop;
  return stats;
}

std::vector<EnumSpec> shard_space(int n, int prefix_len) {
  std::vector<EnumSpec> out;
  std::vector<int> prefix;
  std::function<void()> rec = [&] {
    if ((int)prefix.size() == prefix_len) {
      EnumSpec s;
      s.n = n;
      s.prefix = prefix;
      out.push_back(std::move(s));
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (std::find(prefix.begin(), prefix.end(), v) != prefix.end()) continue;
      prefix.push_back(v);
      rec();
      prefix.pop_back();
    }
  };
  rec();
  return out;
}

int resolve_threads(int requested) {
  int t = requested > 0 ? requested : (int)std::thread::hardware_concurrency();
  if (t < 1) t = 1;
  if (const char* env = std::getenv("CUBIK_THREADS")) {
    int cap = std::atoi(env);
    if (cap > 0 && cap < t) t = cap;
  }
  return t;
}

bool SurveyWitness::better_than(const SurveyWitness& w) const {
  if (w.n == 0) return true;  // empty
  if (n != w.n) return n < w.n;
  if (x != w.x) return x < w.x;
  return o < w.o;
}

namespace {

std::string fingerprint_id(const Laurent& jones_poly) {
  std::string s = jones_poly.serialize();
  std::replace(s.begin(), s.end(), ',', ';');
  return s;
}

struct ShardState {
  EnumStats stats;
  std::map<std::string, SurveyWitness> found;
  std::uint64_t done = 0;
};

std::string ckpt_path(const std::string& dir, int n, const std::vector<int>& prefix) {
  std::string p = dir + "/ckpt_n" + std::to_string(n) + "_s";
  for (int v : prefix) p += std::to_string(v) + "_";
  p += "v1";
  return p;
}

void write_ckpt(const std::string& path, int n, const std::vector<int>& prefix,
                const ShardState& st) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::trunc);
    f << "CNSV1\n";
    f << "n " << n << " shard";
    for (int v : prefix) f << ' ' << v;
    f << "\ndone " << st.done << "\nstats " << st.stats.serialize() << '\n';
    for (const auto& [id, w] : st.found) {
      f << "best " << id << ' ' << w.n;
      for (int v : w.x) f << ' ' << v;
      for (int v : w.o) f << ' ' << v;
      for (int v : w.levels) f << ' ' << v;
      f << '\n';
    }
  }
  std::filesystem::rename(tmp, path);
}

bool read_ckpt(const std::string& path, ShardState& st) {
  std::ifstream f(path);
  if (!f) return false;
  std::string line;
  if (!std::getline(f, line) || line != "CNSV1") return false;
  std::getline(f, line);  // n/shard echo
  while (std::getline(f, line)) {
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    if (tag == "done") ss >> st.done;
    else if (tag == "stats") {
      std::string rest;
      std::getline(ss, rest);
      st.stats = EnumStats::deserialize(rest);
    } else if (tag == "best") {
      std::string id;
      SurveyWitness w;
      ss >> id >> w.n;
      w.x.resize(w.n); w.o.resize(w.n); w.levels.resize(w.n);
      for (int& v : w.x) ss >> v;
      for (int& v : w.o) ss >> v;
      for (int& v : w.levels) ss >> v;
      st.found[id] = std::move(w);
    }
  }
  return true;
}

void merge_found(std::map<std::string, SurveyWitness>& into,
                 const std::map<std::string, SurveyWitness>& from) {
  for (const auto& [id, w] : from) {
    auto it = into.find(id);
    if (it == into.end() || w.better_than(it->second)) into[id] = w;
  }
}

}  // namespace

SurveyResult cube_number_survey(int max_n, const KnotTable& table, int threads,
                                const std::string& checkpoint_dir, std::uint64_t stop_after) {
  (void)table;
  SurveyResult result;
  std::atomic<std::uint64_t> global_units{0};
  std::atomic<bool> halted{false};
  for (int n = 2; n <= max_n; ++n) {
    int plen = n >= 3 ? 1 : 0;
    auto shards = shard_space(n, plen);
    std::vector<ShardState> states(shards.size());
    std::atomic<size_t> next{0};
    int nthreads = resolve_threads(threads);
    auto worker = [&] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= shards.size() || halted.load()) return;
        EnumSpec spec = shards[i];
        ShardState& st = states[i];
        std::string path;
        if (!checkpoint_dir.empty()) {
          path = ckpt_path(checkpoint_dir, n, spec.prefix);
          read_ckpt(path, st);
        }
        spec.resume_xrank = st.done;
        EnumStats base = st.stats;
        auto consumer = [&](const Grid& g, Verdict, const LiftResult* lr) {
          if (!lr || !lr->ok()) return;
          std::string id = fingerprint_id(jones(g));
          SurveyWitness w{g.n, g.x, g.o, lr->levels};
          auto it = st.found.find(id);
          if (it == st.found.end() || w.better_than(it->second)) st.found[id] = std::move(w);
        };
        auto progress = [&](std::uint64_t xrank, const EnumStats& cum) {
          st.done = xrank;
          st.stats = base;
          st.stats.merge(cum);
          if (!path.empty()) write_ckpt(path, n, spec.prefix, st);
          std::uint64_t units = global_units.fetch_add(1) + 1;
          if (stop_after && units >= stop_after) { halted.store(true); return false; }
          return true;
        };
        EnumStats run = enumerate_grids(spec, consumer, progress);
        if (path.empty()) { st.stats = base; st.stats.merge(run); st.done = run.xperms_done; }
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    EnumStats total;
    for (auto& st : states) {
      total.merge(st.stats);
      merge_found(result.found, st.found);
    }
    result.stats_by_n[n] = total;
    if (halted.load()) break;
  }
  return result;
}

std::string survey_csv(const SurveyResult& r, int max_n, const KnotTable& table,
                       const std::string& witness_dir) {
  std::ostringstream ss;
  ss << "knot,fingerprint_id,min_cube_size,witness_file\n";
  auto write_witness = [&](const std::string& stem, const SurveyWitness& w) -> std::string {
    std::string fname = "witness_" + stem + ".json";
    if (!witness_dir.empty()) {
      Grid g(w.n, w.x, w.o);
      auto cube = validate_cube(w.n, cube_from_assignment(g, w.levels));
      std::ofstream f(witness_dir + "/" + fname, std::ios::trunc);
      f << cube_to_json(cube) << '\n';
    }
    return fname;
  };
  std::vector<const KnotRecord*> recs;
  for (const auto& rec : table.records) recs.push_back(&rec);
  std::sort(recs.begin(), recs.end(),
            [](const KnotRecord* a, const KnotRecord* b) { return a->name < b->name; });
  std::set<std::string> table_ids;
  for (const KnotRecord* rec : recs) {
    std::string id = rec->fingerprint.serialize();
    std::replace(id.begin(), id.end(), ',', ';');
    table_ids.insert(id);
    auto it = r.found.find(id);
    if (it == r.found.end())
      ss << rec->name << ',' << id << ',' << (max_n + 1) << ",-\n";
    else
      ss << rec->name << ',' << id << ',' << it->second.n << ','
         << write_witness(rec->name, it->second) << '\n';
  }
  for (const auto& [id, w] : r.found) {
    if (table_ids.count(id)) continue;
    ss << "unknown," << id << ',' << w.n << ',' << write_witness(id, w) << '\n';
  }
  return ss.str();
}

}  // namespace cubik
