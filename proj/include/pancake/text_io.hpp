#pragma once

#include <string>

#include "pancake/stack.hpp"

namespace pancake {

struct ParseError : std::invalid_argument {
  ParseError(const std::string& what, int token_index)
      : std::invalid_argument(what + " (token " +
                              std::to_string(token_index) + ")"),
        token(token_index) {}
  int token;
};

// Whitespace-separated tokens, top first. Signed integers make a burnt
// stack, plain positive integers an unburnt one, and a `u` suffix marks
// unburnt pancakes in a mixed stack. Shorthands I<n>, -I<n>, J<n>, Y<n>
// are accepted.
AnyStack parse_stack(const std::string& text);

// Canonical form: single spaces, explicit signs for burnt entries,
// no shorthands. parse_stack(format_stack(s)) == s.
std::string format_stack(const BurntStack& s);
std::string format_stack(const UnburntStack& s);
std::string format_stack(const MixedStack& s);
std::string format_stack(const AnyStack& s);

}  // namespace pancake
