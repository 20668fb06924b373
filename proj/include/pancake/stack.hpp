#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace pancake {

// Orientation of a pancake in a mixed stack. Down means burnt side down
// (the sorted orientation), Unburnt means the pancake has no burnt side.
enum class Orientation : std::int8_t { Down = 1, Up = -1, Unburnt = 0 };

// Stack of burnt pancakes, top first. Entry +i is pancake i burnt side
// down, -i is burnt side up. Absolute values form a permutation of 1..n.
struct BurntStack {
  std::vector<int> entries;

  int size() const { return static_cast<int>(entries.size()); }
  bool sorted() const;
  bool operator==(const BurntStack&) const = default;
};

// Stack of unburnt pancakes: a permutation of 1..n, top first.
struct UnburntStack {
  std::vector<int> entries;

  int size() const { return static_cast<int>(entries.size()); }
  bool sorted() const;
  bool operator==(const UnburntStack&) const = default;
};

struct MixedEntry {
  int label = 0;
  Orientation orient = Orientation::Unburnt;
  bool operator==(const MixedEntry&) const = default;
};

// Stack where some pancakes are burnt and some are not; labels form a
// permutation of 1..n.
struct MixedStack {
  std::vector<MixedEntry> entries;

  int size() const { return static_cast<int>(entries.size()); }
  bool sorted() const;
  int burnt_count() const;
  bool operator==(const MixedStack&) const = default;
};

using AnyStack = std::variant<BurntStack, UnburntStack, MixedStack>;

enum class SpecialKind { Identity, NegIdentity, J, Y };

// I_n, -I_n, J_n (-I_n with the top pancake flipped) or Y_n (-I_n with
// the second pancake from the bottom flipped).
BurntStack make_special(SpecialKind kind, int n);

// Prefix reversal of the top i pancakes. Burnt/mixed flips toggle the
// orientation of each reversed pancake; i == 0 is a no-op, and an
// unburnt 1-flip is also a no-op.
void flip_in_place(BurntStack& s, int i);
void flip_in_place(UnburntStack& s, int i);
void flip_in_place(MixedStack& s, int i);

template <class Stack>
Stack flip(Stack s, int i) {
  flip_in_place(s, i);
  return s;
}

// -C: every orientation toggled, order unchanged.
BurntStack negate(const BurntStack& s);

// Throws std::invalid_argument if the stack violates its invariants.
void validate(const BurntStack& s);
void validate(const UnburntStack& s);
void validate(const MixedStack& s);

// A replayable flip sequence together with its start stack. Unburnt
// traces only record flips of size >= 2.
struct FlipTrace {
  AnyStack start;
  std::vector<int> flips;

  AnyStack replay() const;
  bool ends_sorted() const;
};

bool is_sorted(const AnyStack& s);

}  // namespace pancake
