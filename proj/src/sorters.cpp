#include "pancake/sorters.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>

#include "pancake/structure.hpp"

namespace pancake {

namespace {

// ---------------------------------------------------------------------
// Endgame: once the stack contracts to a handful of blocks, the flips
// that matter are the ones at block boundaries. A block is stored as a
// label interval; `flipped` means it currently reads hi..lo burnt side
// up (meaningless for unburnt singletons).
struct Segment {
  int lo = 0, hi = 0;
  bool flipped = false;
  int weight() const { return hi - lo + 1; }
};

std::vector<Segment> burnt_segments(const BurntStack& s) {
  std::vector<Segment> segs;
  const int n = s.size();
  int start = 0;
  for (int p = 1; p <= n; ++p) {
    if (p == n || !adjacent_at(s, p)) {
      const int v = s.entries[start];
      const int w = p - start;
      if (v > 0)
        segs.push_back({v, v + w - 1, false});
      else
        segs.push_back({-v - w + 1, -v, true});
      start = p;
    }
  }
  return segs;
}

std::vector<Segment> unburnt_segments(const UnburntStack& s) {
  std::vector<Segment> segs;
  const int n = s.size();
  int start = 0;
  for (int p = 1; p <= n; ++p) {
    bool run = false;
    if (p < n) {
      const int d = s.entries[p] - s.entries[p - 1];
      run = (d == 1 || d == -1) &&
            (p - start < 2 ||
             d == s.entries[start + 1] - s.entries[start]);
    }
    if (!run) {
      const int a = s.entries[start], b = s.entries[p - 1];
      segs.push_back({std::min(a, b), std::max(a, b), a > b});
      start = p;
    }
  }
  return segs;
}

bool segments_sorted(const std::vector<Segment>& segs) {
  int expect = 1;
  for (const auto& g : segs) {
    if (g.flipped) return false;
    if (g.lo != expect) return false;
    expect = g.hi + 1;
  }
  return true;
}

void flip_segments(std::vector<Segment>& segs, int k, bool unburnt) {
  std::reverse(segs.begin(), segs.begin() + k);
  for (int i = 0; i < k; ++i) {
    segs[i].flipped = !segs[i].flipped;
    if (unburnt && segs[i].weight() == 1) segs[i].flipped = false;
  }
}

bool segment_dfs(std::vector<Segment>& segs, bool unburnt, int depth,
                 int last_k, std::vector<int>& out) {
  if (segments_sorted(segs)) return true;
  if (depth == 0) return false;
  const int c = static_cast<int>(segs.size());
  for (int k = 1; k <= c; ++k) {
    if (k == last_k) continue;  // flips are involutions
    if (unburnt && k == 1 && segs[0].weight() == 1) continue;  // no-op
    flip_segments(segs, k, unburnt);
    out.push_back(k);
    if (segment_dfs(segs, unburnt, depth - 1, k, out)) return true;
    out.pop_back();
    flip_segments(segs, k, unburnt);
  }
  return false;
}

// Shortest boundary-flip sequence (segment indices) sorting the
// contracted stack, or nullopt within max_depth.
std::optional<std::vector<int>> segment_sort(std::vector<Segment> segs,
                                             bool unburnt, int max_depth) {
  for (int d = 0; d <= max_depth; ++d) {
    std::vector<Segment> work = segs;
    std::vector<int> out;
    if (segment_dfs(work, unburnt, d, 0, out)) return out;
  }
  return std::nullopt;
}

std::vector<int> segment_flips_to_real(const std::vector<Segment>& start,
                                       const std::vector<int>& seg_flips,
                                       bool unburnt) {
  std::vector<Segment> segs = start;
  std::vector<int> real;
  for (int k : seg_flips) {
    int size = 0;
    for (int i = 0; i < k; ++i) size += segs[i].weight();
    if (!unburnt || size >= 2) real.push_back(size);
    flip_segments(segs, k, unburnt);
  }
  return real;
}

// ---------------------------------------------------------------------
// Working view: the contracted, cyclically renumbered stack the case
// analyses run on, kept in sync with the real stack the trace applies
// to. A working flip of k pancakes is a real flip of their total
// weight.
class SortState {
 public:
  explicit SortState(const BurntStack& s) : real_(s), unburnt_(false) {
    work_.reserve(s.entries.size());
    for (int e : s.entries)
      work_.push_back(
          {std::abs(e), e > 0 ? Orientation::Down : Orientation::Up});
    weight_.assign(s.entries.size(), 1);
  }
  explicit SortState(const UnburntStack& s) : unburnt_(true) {
    real_.entries = s.entries;
    for (int e : s.entries) work_.push_back({e, Orientation::Unburnt});
    weight_.assign(s.entries.size(), 1);
  }

  int m() const { return static_cast<int>(work_.size()); }
  const MixedEntry& at(int p) const { return work_[p - 1]; }

  int find_label(int label) const {
    for (int p = 1; p <= m(); ++p)
      if (work_[p - 1].label == label) return p;
    throw std::logic_error("label not in working stack");
  }

  void renumber() {
    const int mm = m();
    const int shift = 2 - work_[0].label;
    for (auto& e : work_) e.label = ((e.label + shift - 1) % mm + mm) % mm + 1;
  }

  void shift_labels(int delta) {
    const int mm = m();
    for (auto& e : work_) e.label = ((e.label + delta - 1) % mm + mm) % mm + 1;
  }

  void work_flip(int k) {
    int size = 0;
    for (int i = 0; i < k; ++i) size += weight_[i];
    apply_real(size);
    std::reverse(work_.begin(), work_.begin() + k);
    std::reverse(weight_.begin(), weight_.begin() + k);
    for (int i = 0; i < k; ++i) {
      auto& o = work_[i].orient;
      o = static_cast<Orientation>(-static_cast<std::int8_t>(o));
    }
  }

  void apply_real(int size) {
    if (unburnt_) {
      std::reverse(real_.entries.begin(), real_.entries.begin() + size);
      if (size >= 2) trace.push_back(size);
    } else {
      std::reverse(real_.entries.begin(), real_.entries.begin() + size);
      for (int i = 0; i < size; ++i) real_.entries[i] = -real_.entries[i];
      trace.push_back(size);
    }
  }

  // Contracts the adjacent working pair at p, p+1; shifts labels first
  // if the pair wraps around n..1.
  void contract_at(int p) {
    MixedStack view;
    for (const auto& e : work_) view.entries.push_back(e);
    if (!mixed_adjacent(view, p)) {
      const int lu = work_[p - 1].label, lw = work_[p].label;
      if (std::min(lu, lw) != 1 || std::max(lu, lw) != m())
        throw std::logic_error("contract_at: pair not adjacent");
      shift_labels(1);
      view.entries.clear();
      for (const auto& e : work_) view.entries.push_back(e);
      if (!mixed_adjacent(view, p))
        throw std::logic_error("contract_at: pair not adjacent");
    }
    const int lo = std::min(work_[p - 1].label, work_[p].label);
    const bool higher_below = work_[p].label > work_[p - 1].label;
    work_[p - 1] = {lo, higher_below ? Orientation::Down : Orientation::Up};
    weight_[p - 1] += weight_[p];
    work_.erase(work_.begin() + p);
    weight_.erase(weight_.begin() + p);
    for (auto& e : work_)
      if (e.label > lo + 1) --e.label;
  }

  // Signed view of an all-burnt working stack.
  BurntStack burnt_view() const {
    BurntStack v;
    v.entries.reserve(work_.size());
    for (const auto& e : work_)
      v.entries.push_back(e.orient == Orientation::Down ? e.label : -e.label);
    return v;
  }

  // Sorts the remaining blocks by bounded search over boundary flips.
  void finish(int max_depth = 8) {
    const auto segs = unburnt_ ? unburnt_segments(as_unburnt())
                               : burnt_segments(real_);
    auto seq = segment_sort(segs, unburnt_, max_depth);
    if (!seq) throw std::runtime_error("endgame not solvable within bound");
    for (int size : segment_flips_to_real(segs, *seq, unburnt_))
      apply_real(size);
  }

  UnburntStack as_unburnt() const { return UnburntStack{real_.entries}; }
  const BurntStack& real() const { return real_; }
  bool real_sorted() const {
    return unburnt_ ? as_unburnt().sorted() : real_.sorted();
  }

  std::vector<int> trace;

 private:
  std::vector<MixedEntry> work_;
  std::vector<int> weight_;
  BurntStack real_;  // entries are plain labels in unburnt mode
  bool unburnt_;
};

SortOutcome make_outcome(AnyStack start, SortState& st, std::size_t iters) {
  SortOutcome out;
  out.trace.start = std::move(start);
  out.trace.flips = st.trace;
  out.flips_used = st.trace.size();
  out.iterations = iters;
  if (!st.real_sorted())
    throw std::logic_error("sorter finished on an unsorted stack");
  return out;
}

}  // namespace

SortOutcome sort_burnt_average(const BurntStack& stack) {
  validate(stack);
  SortState st(stack);
  std::size_t iters = 0;
  while (st.m() >= 3) {
    st.renumber();
    const bool top_down = st.at(1).orient == Orientation::Down;
    const int q = st.find_label(1);
    const int p = st.find_label(3);
    if (top_down) {
      if (st.at(q).orient == Orientation::Up) {
        st.work_flip(q - 1);  // -2 lands on -1
        st.contract_at(q - 1);
      } else if (st.at(p).orient == Orientation::Down) {
        st.work_flip(1);  // cases 1-2
        st.work_flip(p - 1);
        st.contract_at(p - 1);
      } else {
        st.work_flip(p);  // cases 3-4
        st.work_flip(p - 1);
        st.contract_at(p - 1);
      }
    } else {
      if (st.at(p).orient == Orientation::Down) {
        st.work_flip(p - 1);  // +2 lands on +3
        st.contract_at(p - 1);
      } else if (st.at(q).orient == Orientation::Up) {
        st.work_flip(1);  // cases 7-8
        st.work_flip(q - 1);
        st.contract_at(q - 1);
      } else {
        st.work_flip(q);  // cases 5-6
        st.work_flip(q - 1);
        st.contract_at(q - 1);
        st.work_flip(st.m());
        const int r = st.find_label(2);
        if (r > 1) st.work_flip(r - 1);
      }
    }
    ++iters;
  }
  st.finish();
  return make_outcome(stack, st, iters);
}

SortOutcome sort_unburnt_with_coins(const UnburntStack& stack,
                                    const std::function<int()>& coin) {
  validate(stack);
  SortState st(stack);
  std::size_t iters = 0;
  while (st.m() >= 3) {
    st.renumber();
    const Orientation top = st.at(1).orient;
    const bool look_at_one =
        top == Orientation::Unburnt ? coin() == 0 : top == Orientation::Down;
    const int t = st.find_label(look_at_one ? 1 : 3);
    const Orientation peeked = st.at(t).orient;
    // One flip joins the pair except when it faces the wrong way:
    // unburnt top with the peeked burnt side toward it takes two flips,
    // two matching burnt sides take three.
    const Orientation away =
        look_at_one ? Orientation::Up : Orientation::Down;
    if (top == Orientation::Unburnt) {
      if (peeked == away || peeked == Orientation::Unburnt) {
        st.work_flip(t - 1);
      } else {
        st.work_flip(t);
        st.work_flip(t - 1);
      }
    } else {
      if (peeked == away || peeked == Orientation::Unburnt) {
        st.work_flip(t - 1);
      } else {
        st.work_flip(1);
        st.work_flip(t);
        st.work_flip(t - 1);
      }
    }
    st.contract_at(t - 1);
    ++iters;
  }
  st.finish();
  return make_outcome(stack, st, iters);
}

SortOutcome sort_unburnt_randomized(const UnburntStack& stack,
                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sort_unburnt_with_coins(
      stack, [&rng]() { return static_cast<int>(rng() & 1); });
}

namespace {

BurntStack contract_cyclic(const BurntStack& s, int p) {
  if (adjacent_at(s, p)) return contract(s, p);
  const int n = s.size();
  BurntStack t = s;
  for (auto& e : t.entries) {
    const int label = std::abs(e) % n + 1;
    e = e > 0 ? label : -label;
  }
  return contract(t, p);
}

int greedy_chain_length(BurntStack s) {
  int len = 0;
  while (s.size() > 1) {
    const auto i = single_flip_adjacency(s, true);
    if (!i) break;
    flip_in_place(s, *i);
    s = contract_cyclic(s, *i);
    ++len;
  }
  return len;
}

}  // namespace

SortOutcome sort_greedy_lookahead(const BurntStack& stack) {
  validate(stack);
  SortState st(stack);
  std::size_t iters = 0;

  // Input adjacencies are contracted up front.
  bool again = true;
  while (again && st.m() > 1) {
    again = false;
    const auto view = st.burnt_view();
    for (int p = 1; p < st.m(); ++p) {
      if (view.entries[p] == cyclic_next(view.entries[p - 1], st.m())) {
        st.contract_at(p);
        again = true;
        break;
      }
    }
  }

  const std::size_t iter_limit = 64 + 16 * stack.entries.size();
  while (st.m() > 1) {
    if (++iters > iter_limit)
      throw std::runtime_error("greedy lookahead failed to make progress");
    const auto view = st.burnt_view();
    if (const auto i = single_flip_adjacency(view, true)) {
      st.work_flip(*i);
      st.contract_at(*i);
      continue;
    }
    // No flip creates an adjacency: look one move ahead and take the
    // flip with the longest greedy continuation, smallest flip first.
    int best_k = 1, best_len = -1;
    for (int k = 1; k <= st.m(); ++k) {
      BurntStack sim = view;
      flip_in_place(sim, k);
      const int len = greedy_chain_length(std::move(sim));
      if (len > best_len) {
        best_len = len;
        best_k = k;
      }
    }
    st.work_flip(best_k);
  }
  st.finish();
  return make_outcome(stack, st, iters);
}

FlipTrace endgame_finish(const BurntStack& stack) {
  validate(stack);
  const auto segs = burnt_segments(stack);
  const auto seq = segment_sort(segs, false, 4);
  if (!seq)
    throw std::runtime_error("stack not sortable within four flips");
  FlipTrace t;
  t.start = stack;
  t.flips = segment_flips_to_real(segs, *seq, false);
  return t;
}

}  // namespace pancake
