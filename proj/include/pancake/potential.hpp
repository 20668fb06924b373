#pragma once

#include "pancake/stack.hpp"

namespace pancake {

// Component counts of the potential v(C) and its exact value in integer
// thirds: value_thirds = 3(a - a_minus) - (b - b_minus) + (o - o_minus)
// + 3(l - l_minus) + (ll - ll_minus).
struct PotentialBreakdown {
  int a = 0;         // adjacencies
  int a_minus = 0;   // anti-adjacencies
  int b = 0;         // deep blocks
  int b_minus = 0;   // deep clans
  int o = 0;         // free -1 on top, or pancake 1 in a block
  int o_minus = 0;
  int l = 0;         // +n at the bottom
  int l_minus = 0;
  int ll = 0;        // +n at the bottom and +(n-1) above it
  int ll_minus = 0;
  long long value_thirds = 0;
};

PotentialBreakdown potential(const BurntStack& s);

// potential(flip(s, i)) - potential(s), in thirds; at most 4 for n >= 2.
long long delta_v(const BurntStack& s, int i);

// ceil(3/4 * (v(I_n) - v(C))), a lower bound on the flip distance.
int lower_bound_potential(const BurntStack& s);

// floor(3(n+1)/2), the potential bound evaluated at -I_n.
int neg_identity_bound(int n);

}  // namespace pancake
