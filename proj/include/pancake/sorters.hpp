#pragma once

#include <cstdint>
#include <functional>

#include "pancake/stack.hpp"

namespace pancake {

struct SortOutcome {
  FlipTrace trace;
  std::size_t flips_used = 0;
  std::size_t iterations = 0;
};

// Average-case algorithm for burnt stacks: renumber so pancake 2 is on
// top, create an adjacency near the top via the eight-case table,
// contract, repeat. Average flips at most 7n/4 + 5.
SortOutcome sort_burnt_average(const BurntStack& stack);

// Randomized algorithm for unburnt stacks (peeks at pancake 1 or 3 by
// coin flip when the top is unburnt). Average flips at most 17n/12 + 9.
SortOutcome sort_unburnt_randomized(const UnburntStack& stack,
                                    std::uint64_t seed);

// Same algorithm with an injected coin, for exact averaging over the
// random choices. coin() returns 0 (peek pancake 1) or 1 (peek 3).
SortOutcome sort_unburnt_with_coins(const UnburntStack& stack,
                                    const std::function<int()>& coin);

// Greedy flip sequences with one-step lookahead, cyclic adjacencies
// (pancakes n and 1 may join). Ties broken by smallest flip size.
SortOutcome sort_greedy_lookahead(const BurntStack& stack);

// Sorts a stack whose blocks contract to at most two pancakes, by
// brute force over flip sequences of length <= 4 on the contracted
// representation. Throws std::runtime_error if four flips do not
// suffice.
FlipTrace endgame_finish(const BurntStack& stack);

}  // namespace pancake
