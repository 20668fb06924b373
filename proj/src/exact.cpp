#include "pancake/exact.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <queue>
#include <unordered_map>
#include <unordered_set>

#include "pancake/potential.hpp"
#include "pancake/sorters.hpp"
#include "pancake/structure.hpp"

namespace pancake {

namespace {

constexpr std::uint32_t kFormatVersion = 1;

// Adjacency count used by the greedy bounds: consecutive pairs plus the
// bottom-n condition. A sorted stack of size n scores exactly n.
int adj_score(const BurntStack& s) {
  const int n = s.size();
  int a = 0;
  for (int p = 1; p < n; ++p)
    if (s.entries[p] == s.entries[p - 1] + 1) ++a;
  if (s.entries[n - 1] == n) ++a;
  return a;
}

int adj_score(const UnburntStack& s) {
  const int n = s.size();
  int a = 0;
  for (int p = 1; p < n; ++p)
    if (std::abs(s.entries[p] - s.entries[p - 1]) == 1) ++a;
  if (s.entries[n - 1] == n) ++a;
  return a;
}

std::size_t env_mem_limit_mb() {
  const char* v = std::getenv("PANCAKE_MEM_LIMIT_MB");
  if (!v || !*v) return 0;
  return static_cast<std::size_t>(std::strtoull(v, nullptr, 10));
}

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

// ---------------------------------------------------------------------
// Distance tables

int DistanceTable::max_distance() const {
  int m = 0;
  for (std::uint8_t d : dist)
    if (d != kUnset && d > m) m = d;
  return m;
}

std::vector<std::uint64_t> DistanceTable::histogram() const {
  std::vector<std::uint64_t> h(static_cast<std::size_t>(max_distance()) + 1,
                               0);
  for (std::uint8_t d : dist)
    if (d != kUnset) ++h[d];
  return h;
}

void DistanceTable::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  char header[16] = {'P', 'A', 'N', 'C'};
  const std::uint32_t fields[3] = {kFormatVersion,
                                   static_cast<std::uint32_t>(n),
                                   variant == Variant::Burnt ? 0u : 1u};
  std::memcpy(header + 4, fields, 12);
  out.write(header, sizeof header);
  out.write(reinterpret_cast<const char*>(dist.data()),
            static_cast<std::streamsize>(dist.size()));
  if (!out) throw std::runtime_error("short write to " + path);
}

DistanceTable DistanceTable::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  char header[16];
  in.read(header, sizeof header);
  if (!in || std::memcmp(header, "PANC", 4) != 0)
    throw std::runtime_error(path + ": not a distance table");
  std::uint32_t fields[3];
  std::memcpy(fields, header + 4, 12);
  if (fields[0] != kFormatVersion)
    throw std::runtime_error(path + ": unsupported version");
  DistanceTable t;
  t.n = static_cast<int>(fields[1]);
  t.variant = fields[2] == 0 ? Variant::Burnt : Variant::Unburnt;
  const std::uint64_t count = stack_count(t.n, t.variant);
  t.dist.resize(count);
  in.read(reinterpret_cast<char*>(t.dist.data()),
          static_cast<std::streamsize>(count));
  if (static_cast<std::uint64_t>(in.gcount()) != count)
    throw std::runtime_error(path + ": truncated table");
  return t;
}

DistanceTable bfs_distances(int n, Variant variant,
                            std::size_t mem_limit_mb) {
  if (n < 1) throw std::invalid_argument("stack size must be at least 1");
  const int hard_cap = variant == Variant::Burnt ? 9 : 11;
  if (n > hard_cap)
    throw ResourceLimitError("state space too large for a full BFS");
  const std::uint64_t count = stack_count(n, variant);
  if (mem_limit_mb == 0) mem_limit_mb = env_mem_limit_mb();
  if (mem_limit_mb != 0 && count > mem_limit_mb * 1024ull * 1024ull)
    throw ResourceLimitError("distance table exceeds the memory limit");

  DistanceTable t;
  t.n = n;
  t.variant = variant;
  t.dist.assign(count, DistanceTable::kUnset);
  t.dist[0] = 0;  // the sorted stack ranks 0

  const int min_flip = variant == Variant::Burnt ? 1 : 2;
  bool advanced = true;
  for (std::uint8_t d = 0; advanced; ++d) {
    advanced = false;
    for (std::uint64_t r = 0; r < count; ++r) {
      if (t.dist[r] != d) continue;
      if (variant == Variant::Burnt) {
        const BurntStack s = unrank_burnt(r, n);
        for (int i = min_flip; i <= n; ++i) {
          const std::uint64_t r2 = rank(flip(s, i));
          if (t.dist[r2] == DistanceTable::kUnset) {
            t.dist[r2] = d + 1;
            advanced = true;
          }
        }
      } else {
        const UnburntStack s = unrank_unburnt(r, n);
        for (int i = min_flip; i <= n; ++i) {
          const std::uint64_t r2 = rank(flip(s, i));
          if (t.dist[r2] == DistanceTable::kUnset) {
            t.dist[r2] = d + 1;
            advanced = true;
          }
        }
      }
    }
  }
  return t;
}

// ---------------------------------------------------------------------
// Greedy lower bounds

namespace {

bool unburnt_greedy_dfs(UnburntStack& s, int adj) {
  const int n = s.size();
  if (s.sorted()) return true;
  for (int i = 2; i <= n; ++i) {
    flip_in_place(s, i);
    if (adj_score(s) == adj + 1) {
      if (unburnt_greedy_dfs(s, adj + 1)) {
        flip_in_place(s, i);
        return true;
      }
    }
    flip_in_place(s, i);
  }
  return false;
}

struct BurntGreedySearch {
  int n = 0;
  std::size_t node_limit = 0;
  std::size_t nodes = 0;
  bool truncated = false;
  int best = std::numeric_limits<int>::max();

  void dfs(BurntStack& s, int adj, int len, int nc_left) {
    if (truncated) return;
    if (++nodes > node_limit) {
      truncated = true;
      return;
    }
    if (s.sorted()) {
      best = std::min(best, len);
      return;
    }
    if (len + (n - adj) >= best) return;
    // The creating flip (unique if it exists) first, then non-creating
    // flips in increasing size while the budget lasts.
    for (int pass = 0; pass < 2; ++pass) {
      for (int i = 1; i <= n; ++i) {
        flip_in_place(s, i);
        const int a2 = adj_score(s);
        const bool creating = a2 == adj + 1;
        if (creating == (pass == 0) && (creating || nc_left > 0))
          dfs(s, a2, len + 1, creating ? nc_left : nc_left - 1);
        flip_in_place(s, i);
        if (truncated) return;
      }
    }
  }
};

}  // namespace

LowerBound greedy_lb_unburnt(const UnburntStack& s) {
  validate(s);
  const int missing = s.size() - adj_score(s);
  UnburntStack work = s;
  if (unburnt_greedy_dfs(work, adj_score(s))) return {missing, true, false};
  return {missing + 1, false, false};
}

LowerBound greedy_lb_burnt(const BurntStack& s, std::size_t node_limit) {
  validate(s);
  const int missing = s.size() - adj_score(s);
  BurntGreedySearch search;
  search.n = s.size();
  search.node_limit = node_limit;
  BurntStack work = s;
  search.dfs(work, adj_score(s), 0, 2);
  const int best = search.best;
  if (best == missing) return {best, true, false};
  if (search.truncated) return {missing + 1, false, true};
  if (best <= missing + 3) return {best, true, false};
  // best == missing + 4 may be beaten by a three-non-creating sequence,
  // but any such sequence has length at least missing + 3.
  return {missing + 3, false, false};
}

// ---------------------------------------------------------------------
// A*

namespace {

// Repeatedly contracts plain adjacencies; the result has none.
BurntStack contract_fully(BurntStack s) {
  bool again = true;
  while (again && s.size() > 1) {
    again = false;
    for (int p = 1; p < s.size(); ++p) {
      if (adjacent_at(s, p)) {
        s = contract(s, p);
        again = true;
        break;
      }
    }
  }
  return s;
}

const DistanceTable& endgame_table(int size) {
  static std::mutex mu;
  static std::map<int, DistanceTable> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(size);
  if (it == cache.end())
    it = cache.emplace(size, bfs_distances(size, Variant::Burnt)).first;
  return it->second;
}

// Node limit for heuristic-internal greedy searches; public calls get
// the full configured budget.
constexpr std::size_t kHeuristicGreedyNodes = 4000;

struct Heuristic {
  int h = 0;
  bool exact = false;
};

Heuristic burnt_heuristic(const BurntStack& s, const SolverConfig& cfg) {
  Heuristic r;
  if (s.sorted()) return {0, true};
  if (cfg.use_potential_bound) r.h = lower_bound_potential(s);
  if (cfg.use_greedy_bound) {
    const LowerBound g = greedy_lb_burnt(s, kHeuristicGreedyNodes);
    if (g.bound > r.h || (g.exact && g.bound >= r.h)) {
      r.h = g.bound;
      r.exact = g.exact;
    }
  }
  return r;
}

Heuristic unburnt_heuristic(const UnburntStack& s, const SolverConfig& cfg) {
  if (s.sorted()) return {0, true};
  if (!cfg.use_greedy_bound) return {0, false};
  const LowerBound g = greedy_lb_unburnt(s);
  return {g.bound, g.exact};
}

struct OpenEntry {
  int f = 0;
  int g = 0;
  std::uint64_t id = 0;  // insertion order, final tie-break
  bool operator<(const OpenEntry& o) const {
    if (f != o.f) return f > o.f;          // smallest f first
    if (g != o.g) return g < o.g;          // then largest g
    return id > o.id;
  }
};

void check_config(const SolverConfig& cfg) {
  if (cfg.endgame_table_size < 1 || cfg.endgame_table_size > 9)
    throw std::invalid_argument("endgame table size must be in 1..9");
}

}  // namespace

int astar_distance(const BurntStack& stack, const SolverConfig& cfg) {
  validate(stack);
  check_config(cfg);
  const BurntStack start = contract_fully(stack);
  if (start.size() <= cfg.endgame_table_size)
    return endgame_table(start.size()).dist[rank(start)];

  int incumbent =
      static_cast<int>(sort_greedy_lookahead(start).flips_used);

  std::unordered_map<std::vector<int>, int, VecHash> best_g;
  std::vector<BurntStack> states;
  std::priority_queue<OpenEntry> open;

  const Heuristic h0 = burnt_heuristic(start, cfg);
  if (h0.exact) return h0.h;
  best_g[start.entries] = 0;
  states.push_back(start);
  open.push({h0.h, 0, 0});

  std::size_t expanded = 0;
  while (!open.empty()) {
    const OpenEntry top = open.top();
    open.pop();
    if (top.f >= incumbent) return incumbent;
    const BurntStack cur = states[top.id];
    const auto it = best_g.find(cur.entries);
    if (it == best_g.end() || it->second != top.g) continue;  // stale
    if (++expanded > cfg.node_limit)
      throw ResourceLimitError("A* node limit exceeded");

    const int m = cur.size();
    for (int i = 1; i <= m; ++i) {
      BurntStack child = contract_fully(flip(cur, i));
      const int g2 = top.g + 1;
      if (child.size() <= cfg.endgame_table_size) {
        const int total =
            g2 + endgame_table(child.size()).dist[rank(child)];
        incumbent = std::min(incumbent, total);
        continue;
      }
      const auto found = best_g.find(child.entries);
      if (found != best_g.end() && found->second <= g2) continue;
      const Heuristic h = burnt_heuristic(child, cfg);
      if (h.exact) {
        incumbent = std::min(incumbent, g2 + h.h);
        continue;
      }
      if (g2 + h.h >= incumbent) continue;
      best_g[child.entries] = g2;
      states.push_back(child);
      open.push({g2 + h.h, g2, states.size() - 1});
    }
  }
  return incumbent;
}

int astar_distance(const UnburntStack& stack, const SolverConfig& cfg) {
  validate(stack);
  check_config(cfg);
  if (stack.sorted()) return 0;
  const int n = stack.size();

  int incumbent = std::numeric_limits<int>::max();
  std::unordered_map<std::vector<int>, int, VecHash> best_g;
  std::vector<UnburntStack> states;
  std::priority_queue<OpenEntry> open;

  const Heuristic h0 = unburnt_heuristic(stack, cfg);
  if (h0.exact) return h0.h;
  best_g[stack.entries] = 0;
  states.push_back(stack);
  open.push({h0.h, 0, 0});

  std::size_t expanded = 0;
  while (!open.empty()) {
    const OpenEntry top = open.top();
    open.pop();
    if (top.f >= incumbent) return incumbent;
    const UnburntStack cur = states[top.id];
    const auto it = best_g.find(cur.entries);
    if (it == best_g.end() || it->second != top.g) continue;
    if (++expanded > cfg.node_limit)
      throw ResourceLimitError("A* node limit exceeded");

    for (int i = 2; i <= n; ++i) {
      UnburntStack child = flip(cur, i);
      const int g2 = top.g + 1;
      if (child.sorted()) {
        incumbent = std::min(incumbent, g2);
        continue;
      }
      const auto found = best_g.find(child.entries);
      if (found != best_g.end() && found->second <= g2) continue;
      const Heuristic h = unburnt_heuristic(child, cfg);
      if (h.exact) {
        incumbent = std::min(incumbent, g2 + h.h);
        continue;
      }
      if (incumbent != std::numeric_limits<int>::max() &&
          g2 + h.h >= incumbent)
        continue;
      best_g[child.entries] = g2;
      states.push_back(child);
      open.push({g2 + h.h, g2, states.size() - 1});
    }
  }
  if (incumbent == std::numeric_limits<int>::max())
    throw std::logic_error("A* exhausted the space without a solution");
  return incumbent;
}

// ---------------------------------------------------------------------
// Candidate sets and max flips

CandidateSet candidate_set_unburnt(const DistanceTable& prev, int m) {
  if (prev.variant != Variant::Unburnt)
    throw std::invalid_argument("candidate_set_unburnt needs an unburnt table");
  CandidateSet out;
  out.n = prev.n + 1;
  out.variant = Variant::Unburnt;
  out.m_min = m;
  const int n = out.n;
  const int lo = std::max(0, m - 2);
  std::unordered_set<std::uint64_t> seen;
  const std::uint64_t count = prev.dist.size();
  for (std::uint64_t r = 0; r < count; ++r) {
    if (prev.dist[r] == DistanceTable::kUnset || prev.dist[r] < lo) continue;
    UnburntStack s = unrank_unburnt(r, prev.n);
    s.entries.push_back(n);          // intermediate 1
    seen.insert(rank(s));
    flip_in_place(s, n);             // intermediate 2
    seen.insert(rank(s));
    for (int i = 2; i <= n; ++i) seen.insert(rank(flip(s, i)));
  }
  out.stacks.assign(seen.begin(), seen.end());
  std::sort(out.stacks.begin(), out.stacks.end());
  return out;
}

CandidateSet candidate_set_burnt(const DistanceTable& prev, int m) {
  if (prev.variant != Variant::Burnt)
    throw std::invalid_argument("candidate_set_burnt needs a burnt table");
  CandidateSet out;
  out.n = prev.n + 1;
  out.variant = Variant::Burnt;
  out.m_min = m;
  const int n = out.n;
  const int lo = std::max(0, m - 2);
  std::unordered_set<std::uint64_t> seen;
  seen.insert(rank(make_special(SpecialKind::NegIdentity, n)));
  const std::uint64_t count = prev.dist.size();
  for (std::uint64_t r = 0; r < count; ++r) {
    if (prev.dist[r] == DistanceTable::kUnset || prev.dist[r] < lo) continue;
    const BurntStack s = unrank_burnt(r, prev.n);
    for (int p = 1; p <= prev.n; ++p) {
      const BurntStack t = expand(s, p);
      seen.insert(rank(t));
      for (int i = 1; i <= n; ++i) {
        const BurntStack t1 = flip(t, i);
        seen.insert(rank(t1));
        for (int j = 1; j <= n; ++j) seen.insert(rank(flip(t1, j)));
      }
    }
  }
  out.stacks.assign(seen.begin(), seen.end());
  std::sort(out.stacks.begin(), out.stacks.end());
  return out;
}

MaxFlipsResult max_flips(int n, Variant variant, const SolverConfig& cfg,
                         MaxFlipsMethod method) {
  if (n < 1) throw std::invalid_argument("stack size must be at least 1");
  const int bfs_cap = variant == Variant::Burnt ? 8 : 10;
  if (method == MaxFlipsMethod::Auto)
    method = n <= bfs_cap ? MaxFlipsMethod::Bfs : MaxFlipsMethod::Candidates;

  MaxFlipsResult out;
  if (method == MaxFlipsMethod::Bfs) {
    const DistanceTable t = bfs_distances(n, variant);
    out.value = t.max_distance();
    for (std::uint64_t r = 0; r < t.dist.size(); ++r)
      if (t.dist[r] == out.value) out.witnesses.push_back(r);
    return out;
  }

  const DistanceTable prev = bfs_distances(n - 1, variant);
  const int m = prev.max_distance();
  const CandidateSet cand = variant == Variant::Burnt
                                ? candidate_set_burnt(prev, m)
                                : candidate_set_unburnt(prev, m);
  for (std::uint64_t r : cand.stacks) {
    int d;
    if (variant == Variant::Burnt)
      d = astar_distance(unrank_burnt(r, n), cfg);
    else
      d = astar_distance(unrank_unburnt(r, n), cfg);
    if (d > out.value) {
      out.value = d;
      out.witnesses.clear();
    }
    if (d == out.value) out.witnesses.push_back(r);
  }
  std::sort(out.witnesses.begin(), out.witnesses.end());
  return out;
}

bool verify_trace(const AnyStack& stack, const std::vector<int>& flips) {
  std::visit([](const auto& s) { validate(s); }, stack);
  const int n = std::visit([](const auto& s) { return s.size(); }, stack);
  for (int f : flips)
    if (f < 1 || f > n)
      throw std::invalid_argument("flip size out of range");
  FlipTrace t;
  t.start = stack;
  t.flips = flips;
  return t.ends_sorted();
}

}  // namespace pancake
