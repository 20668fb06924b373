#pragma once

#include <optional>

#include "pancake/stack.hpp"

namespace pancake {

// Maximal run of adjacencies (block) or anti-adjacencies (clan),
// positions 1-based and inclusive. Surface means it contains the top.
struct Interval {
  int first = 0;
  int last = 0;
  bool surface = false;
  bool operator==(const Interval&) const = default;
};

struct StructureReport {
  std::vector<int> adjacency_positions;       // p with e[p+1] = e[p] + 1
  std::vector<int> anti_adjacency_positions;  // p with e[p+1] = e[p] - 1
  std::vector<Interval> blocks;
  std::vector<Interval> clans;
  std::vector<int> free_positions;
};

// Signed cyclic successor: s + 1 with labels wrapping modulo n, so
// next(+n) = +1 and next(-1) = -n.
int cyclic_next(int s, int n);

// Adjacency test between positions p and p+1 (1-based p).
bool adjacent_at(const BurntStack& s, int p, bool cyclic = false);

StructureReport analyze_structure(const BurntStack& s, bool cyclic = false);

// The unique flip that increases the adjacency count by one, if any:
// the pancake with value -e[1] + 1 sits at position j >= 2 and the pair
// at the cut (j-1, j) is not already adjacent. Returns the flip size.
std::optional<int> single_flip_adjacency(const BurntStack& s,
                                         bool cyclic = false);

// Replaces the adjacent pair at positions p, p+1 by a single pancake;
// labels above the removed one are decremented.
BurntStack contract(const BurntStack& s, int p);
MixedStack contract(const MixedStack& s, int p);

// True iff the unburnt members of the pair at p, p+1 can be oriented so
// that the pair forms a burnt adjacency. `completion` receives the
// signed value of the upper member under that orientation.
bool mixed_adjacent(const MixedStack& s, int p, int* completion = nullptr);

// Inverse of contract: the pancake at position p becomes an adjacent
// pair, labels above the split point shifted up.
BurntStack expand(const BurntStack& s, int p);

// Shifts labels cyclically so the top pancake gets label 2 (for n >= 2);
// orientations are unchanged.
BurntStack cyclic_renumber(const BurntStack& s);
MixedStack cyclic_renumber(const MixedStack& s);

}  // namespace pancake
