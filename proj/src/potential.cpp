#include "pancake/potential.hpp"

#include "pancake/structure.hpp"

namespace pancake {

namespace {

struct HalfBreakdown {
  int a = 0, b = 0, o = 0, l = 0, ll = 0;
};

HalfBreakdown half(const BurntStack& s) {
  const int n = s.size();
  const auto rep = analyze_structure(s);
  HalfBreakdown h;
  h.a = static_cast<int>(rep.adjacency_positions.size());
  for (const auto& blk : rep.blocks)
    if (!blk.surface) ++h.b;

  // Pancake 1 in a block means the pair (+1,+2) or (-2,-1) exists.
  bool one_in_block = false;
  for (int p = 1; p < n; ++p) {
    if ((s.entries[p - 1] == 1 && s.entries[p] == 2) ||
        (s.entries[p - 1] == -2 && s.entries[p] == -1))
      one_in_block = true;
  }
  const bool free_neg_one_on_top =
      s.entries[0] == -1 && (n < 2 || s.entries[1] != -2);
  h.o = (free_neg_one_on_top || one_in_block) ? 1 : 0;

  h.l = s.entries[n - 1] == n ? 1 : 0;
  h.ll = (h.l && n >= 2 && s.entries[n - 2] == n - 1) ? 1 : 0;
  return h;
}

}  // namespace

PotentialBreakdown potential(const BurntStack& s) {
  const HalfBreakdown plus = half(s);
  const HalfBreakdown minus = half(negate(s));
  PotentialBreakdown r;
  r.a = plus.a;
  r.b = plus.b;
  r.o = plus.o;
  r.l = plus.l;
  r.ll = plus.ll;
  r.a_minus = minus.a;
  r.b_minus = minus.b;
  r.o_minus = minus.o;
  r.l_minus = minus.l;
  r.ll_minus = minus.ll;
  r.value_thirds = 3LL * (r.a - r.a_minus) - (r.b - r.b_minus) +
                   (r.o - r.o_minus) + 3LL * (r.l - r.l_minus) +
                   (r.ll - r.ll_minus);
  return r;
}

long long delta_v(const BurntStack& s, int i) {
  return potential(flip(s, i)).value_thirds - potential(s).value_thirds;
}

int lower_bound_potential(const BurntStack& s) {
  const int n = s.size();
  if (n == 1) return s.entries[0] == 1 ? 0 : 1;
  // v(I_n) = n + 2/3, i.e. 3n + 2 thirds.
  const long long diff_thirds = (3LL * n + 2) - potential(s).value_thirds;
  if (diff_thirds <= 0) return 0;
  // ceil(3/4 * diff_thirds / 3) = ceil(diff_thirds / 4)
  return static_cast<int>((diff_thirds + 3) / 4);
}

int neg_identity_bound(int n) {
  if (n < 1) throw std::invalid_argument("stack size must be at least 1");
  return 3 * (n + 1) / 2;
}

}  // namespace pancake
