#pragma once

#include <cstdint>

#include "pancake/stack.hpp"

namespace pancake {

enum class Variant { Burnt, Unburnt };

// Number of stacks of size n: n! * 2^n burnt, n! unburnt. Throws if the
// count does not fit in 64 bits.
std::uint64_t stack_count(int n, Variant variant);

// Mixed-radix bijection (Lehmer code times orientation bits) between
// stacks and 0..count-1, with the sorted stack at index 0.
std::uint64_t rank(const BurntStack& s);
std::uint64_t rank(const UnburntStack& s);
BurntStack unrank_burnt(std::uint64_t index, int n);
UnburntStack unrank_unburnt(std::uint64_t index, int n);

}  // namespace pancake
