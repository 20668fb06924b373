#include "pancake/structure.hpp"

#include <cstdlib>

namespace pancake {

int cyclic_next(int s, int n) {
  int t = s + 1;
  if (t == 0) return -n;
  if (t == n + 1) return 1;
  return t;
}

bool adjacent_at(const BurntStack& s, int p, bool cyclic) {
  const int n = s.size();
  if (p < 1 || p >= n) return false;
  const int want = cyclic ? cyclic_next(s.entries[p - 1], n)
                          : s.entries[p - 1] + 1;
  return want != 0 && s.entries[p] == want;
}

namespace {

bool anti_adjacent_at(const BurntStack& s, int p, bool cyclic) {
  const int n = s.size();
  if (p < 1 || p >= n) return false;
  // lower = upper - 1, with the same wrap rule as cyclic_next.
  int want = s.entries[p - 1] - 1;
  if (cyclic) {
    if (want == 0) want = n;
    if (want == -n - 1) want = -1;
  } else if (want == 0) {
    return false;
  }
  return s.entries[p] == want;
}

// Groups consecutive true pair indicators (indexed 1..n-1) into
// inclusive position intervals of length >= 2.
template <class Pred>
std::vector<Interval> runs_of(int n, Pred pair_set) {
  std::vector<Interval> out;
  int start = 0;
  for (int p = 1; p <= n; ++p) {
    const bool set = p < n && pair_set(p);
    if (set && start == 0) start = p;
    if (!set && start != 0) {
      out.push_back({start, p, start == 1});
      start = 0;
    }
  }
  return out;
}

}  // namespace

StructureReport analyze_structure(const BurntStack& s, bool cyclic) {
  const int n = s.size();
  StructureReport r;
  for (int p = 1; p < n; ++p) {
    if (adjacent_at(s, p, cyclic)) r.adjacency_positions.push_back(p);
    if (anti_adjacent_at(s, p, cyclic)) r.anti_adjacency_positions.push_back(p);
  }
  r.blocks = runs_of(n, [&](int p) { return adjacent_at(s, p, cyclic); });
  r.clans = runs_of(n, [&](int p) { return anti_adjacent_at(s, p, cyclic); });

  std::vector<char> taken(n + 1, 0);
  for (const auto& iv : r.blocks)
    for (int p = iv.first; p <= iv.last; ++p) taken[p] = 1;
  for (const auto& iv : r.clans)
    for (int p = iv.first; p <= iv.last; ++p) taken[p] = 1;
  for (int p = 1; p <= n; ++p)
    if (!taken[p]) r.free_positions.push_back(p);
  return r;
}

std::optional<int> single_flip_adjacency(const BurntStack& s, bool cyclic) {
  const int n = s.size();
  if (n < 2) return std::nullopt;
  const int target =
      cyclic ? cyclic_next(-s.entries[0], n) : -s.entries[0] + 1;
  if (target == 0) return std::nullopt;
  for (int j = 2; j <= n; ++j) {
    if (s.entries[j - 1] == target) {
      // The flip also cuts the pair (j-1, j); a pre-existing adjacency
      // there would cancel the gain.
      if (adjacent_at(s, j - 1, cyclic)) return std::nullopt;
      return j - 1;
    }
  }
  return std::nullopt;
}

BurntStack contract(const BurntStack& s, int p) {
  if (!adjacent_at(s, p))
    throw std::invalid_argument("contract: pair is not adjacent");
  const int upper = s.entries[p - 1];
  const int merged = upper > 0 ? upper : upper + 1;
  const int removed = std::abs(merged) + 1;
  BurntStack r;
  r.entries.reserve(s.entries.size() - 1);
  for (int q = 0; q < s.size(); ++q) {
    if (q == p) continue;  // drop the lower member of the pair
    int e = q == p - 1 ? merged : s.entries[q];
    if (std::abs(e) > removed) e += e > 0 ? -1 : 1;
    r.entries.push_back(e);
  }
  return r;
}

bool mixed_adjacent(const MixedStack& s, int p, int* completion) {
  const int n = s.size();
  if (p < 1 || p >= n) return false;
  const auto& u = s.entries[p - 1];
  const auto& w = s.entries[p];
  auto candidates = [](const MixedEntry& e, int out[2]) {
    if (e.orient == Orientation::Unburnt) {
      out[0] = e.label;
      out[1] = -e.label;
      return 2;
    }
    out[0] = e.orient == Orientation::Down ? e.label : -e.label;
    return 1;
  };
  int su[2], sw[2];
  const int nu = candidates(u, su), nw = candidates(w, sw);
  for (int a = 0; a < nu; ++a)
    for (int b = 0; b < nw; ++b)
      if (sw[b] == su[a] + 1) {
        if (completion) *completion = su[a];
        return true;
      }
  return false;
}

MixedStack contract(const MixedStack& s, int p) {
  int comp = 0;
  if (!mixed_adjacent(s, p, &comp))
    throw std::invalid_argument("contract: pair is not adjacent");
  const int lo = std::min(s.entries[p - 1].label, s.entries[p].label);
  const int removed = lo + 1;
  // Burnt side toward the member with the higher label.
  const bool higher_below = s.entries[p].label > s.entries[p - 1].label;
  MixedStack r;
  r.entries.reserve(s.entries.size() - 1);
  for (int q = 0; q < s.size(); ++q) {
    if (q == p) continue;
    MixedEntry e = s.entries[q];
    if (q == p - 1)
      e = {lo, higher_below ? Orientation::Down : Orientation::Up};
    if (e.label > removed) --e.label;
    r.entries.push_back(e);
  }
  return r;
}

BurntStack expand(const BurntStack& s, int p) {
  if (p < 1 || p > s.size())
    throw std::invalid_argument("expand: position out of range");
  const int v = s.entries[p - 1];
  const int split = std::abs(v);
  BurntStack r;
  r.entries.reserve(s.entries.size() + 1);
  for (int q = 0; q < s.size(); ++q) {
    int e = s.entries[q];
    if (std::abs(e) > split) e += e > 0 ? 1 : -1;
    if (q == p - 1) {
      if (v > 0) {
        r.entries.push_back(v);
        r.entries.push_back(v + 1);
      } else {
        r.entries.push_back(v - 1);
        r.entries.push_back(v);
      }
    } else {
      r.entries.push_back(e);
    }
  }
  return r;
}

namespace {

int renumber_label(int j, int shift, int n) {
  return ((j + shift - 1) % n + n) % n + 1;
}

}  // namespace

BurntStack cyclic_renumber(const BurntStack& s) {
  const int n = s.size();
  const int shift = 2 - std::abs(s.entries[0]);
  BurntStack r = s;
  for (auto& e : r.entries) {
    const int label = renumber_label(std::abs(e), shift, n);
    e = e > 0 ? label : -label;
  }
  return r;
}

MixedStack cyclic_renumber(const MixedStack& s) {
  const int n = s.size();
  const int shift = 2 - s.entries[0].label;
  MixedStack r = s;
  for (auto& e : r.entries) e.label = renumber_label(e.label, shift, n);
  return r;
}

}  // namespace pancake
