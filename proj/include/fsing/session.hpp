#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fsing/frobenius.hpp"

namespace fsing {

/// A batch input file:
///   ring: p=<prime> vars=[a,b,...]
///   quotient: <poly>{, <poly>}
///   ideal <name>: <poly>{, <poly>}
///   poly <name>: <poly>
///   map <name>: e=<nat> u=<poly>
/// `#` starts a comment. The ring line comes first; polynomials may use
/// earlier `poly` names.
struct Session {
  enum class Kind { Ideal, Poly, Map };
  struct Entry {
    Kind kind;
    std::string name;
    std::vector<Poly> polys;  // one element for Poly and Map
    int e = 0;                // Map only
  };

  RingPtr ring;
  std::vector<Poly> quotient;
  std::vector<Entry> entries;

  RingCtx context() const;
  const Entry* find(std::string_view name) const;

  /// Named ideal; "quotient" is the defining ideal. Throws UnknownName.
  Ideal ideal(std::string_view name) const;
  Poly poly(std::string_view name) const;
  CartierMapSpec map(std::string_view name) const;

  bool operator==(const Session& o) const;
};

/// Throws ParseError (with line and column), UnknownName or BadPrime.
Session parse_session(std::string_view text);
Session load_session(const std::string& path);

/// Canonical text; parse_session(print_session(s)) == s.
std::string print_session(const Session& s);

}  // namespace fsing
