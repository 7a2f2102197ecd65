#pragma once

#include <functional>
#include <string_view>
#include <vector>

#include "fsing/poly.hpp"

namespace fsing {

/// Looks up a named polynomial; returns nullptr when the name is unknown.
using NameResolver = std::function<const Poly*(std::string_view)>;

/// Grammar:
///   expr   := ['-'] term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' integer)?
///   atom   := integer | identifier | '(' expr ')'
/// Identifiers are ring variables first, then names offered by `resolver`.
/// Integer coefficients are reduced mod p. Errors are reported at
/// (line, column_offset + position).
Poly parse_poly(const RingPtr& ring, std::string_view text, const NameResolver& resolver = {},
                int line = 1, int column_offset = 1);

/// Comma-separated list of expressions (commas inside parentheses do not split).
std::vector<Poly> parse_poly_list(const RingPtr& ring, std::string_view text,
                                  const NameResolver& resolver = {}, int line = 1,
                                  int column_offset = 1);

}  // namespace fsing
