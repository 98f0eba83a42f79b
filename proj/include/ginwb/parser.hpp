#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "ginwb/polynomial.hpp"

namespace ginwb {

// Polynomial text grammar, whitespace-insensitive:
//   polynomial := ['+'|'-'] term (('+'|'-') term)*
//   term       := [rational] factor*      (at least one of the two)
//   rational   := int ['/' int]
//   factor     := x<i> ['^' <e>]          with 1 <= i <= arity
// Example: "x1^2 + 3/2 x2 x3 - x4^2"

/// Parse one polynomial. line/column are the position of the start of `text`
/// inside the enclosing document and are only used for error reporting.
Polynomial parse_polynomial(std::string_view text, int arity, int line = 1, int column = 1);

/// Parse a whole input: one polynomial per line, with ';' as an additional
/// separator. When `arity` is absent it is inferred as the largest variable
/// index in the input. Returns the forms together with the arity used.
std::pair<std::vector<Polynomial>, int> parse_forms(std::string_view text,
                                                    std::optional<int> arity = std::nullopt);

} // namespace ginwb
