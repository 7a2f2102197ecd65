#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fsing {

enum class ErrorKind {
  InvalidArgument,
  BadPrime,
  TooManyVariables,
  MixedRings,
  DegreeOverflow,
  ParseError,
  UnknownName,
  ZeroDivisorIdeal,
  NotZeroDimensional,
  QuotientRingUnsupported,
  InvalidBasisIndex,
  NotMaximal,
  NotContaining,
  ZeroMultiplier,
  ZeroTestElement,
  NotPrincipal,
  NotIrreducible,
  NoTestElementFound,
  NotInMaximal,
  NotFPure,
  NotMonomial,
  NonTerminating,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " +
                                         std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        detail_(message) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  int line_;
  int column_;
  std::string detail_;
};

}  // namespace fsing
