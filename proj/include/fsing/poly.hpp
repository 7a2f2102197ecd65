#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fsing/field.hpp"
#include "fsing/monomial.hpp"

namespace fsing {

/// The ambient polynomial ring S = F_p[x_1, ..., x_n].
class PolyRing {
 public:
  /// Throws BadPrime, TooManyVariables or InvalidArgument (bad/duplicate names).
  PolyRing(std::uint64_t p, std::vector<std::string> vars);

  const PrimeField& field() const noexcept { return field_; }
  std::uint32_t characteristic() const noexcept { return field_.characteristic(); }
  std::size_t nvars() const noexcept { return vars_.size(); }
  const std::vector<std::string>& vars() const noexcept { return vars_; }
  std::optional<std::size_t> var_index(std::string_view name) const;

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.field_ == b.field_ && a.vars_ == b.vars_;
  }

 private:
  PrimeField field_;
  std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::uint64_t p, std::vector<std::string> vars);

/// Throws MixedRings unless both handles describe the same ring.
void require_same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
  Monomial mono;
  std::uint32_t coeff = 0;

  bool operator==(const Term&) const = default;
};

/// Sparse polynomial over F_p. Terms are stored in strictly decreasing
/// degrevlex order with nonzero coefficients, so equal polynomials have
/// identical storage.
class Poly {
 public:
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly constant(RingPtr ring, std::int64_t c);
  static Poly variable(RingPtr ring, std::size_t index);
  static Poly monomial(RingPtr ring, const Monomial& m, std::int64_t c = 1);
  /// Sorts, merges like terms and drops zeros.
  static Poly from_terms(RingPtr ring, std::vector<Term> terms);
  /// Text syntax `3*x^2*y + z`; see parse.hpp for name resolution.
  static Poly parse(RingPtr ring, std::string_view text);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  /// Leading term in degrevlex; requires a nonzero polynomial.
  const Term& leading() const { return terms_.front(); }
  std::int32_t total_degree() const noexcept;
  /// Coefficient of m, zero if absent.
  std::uint32_t coefficient(const Monomial& m) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(std::uint32_t c) const;
  Poly times(const Monomial& m, std::uint32_t c = 1) const;
  /// Power by binary exponentiation of the base-p digits of n, using
  /// f^(p^i) = f(x^(p^i)) over F_p for the digit places.
  Poly pow(std::uint64_t n) const;
  /// f^(p^e): every exponent scaled by p^e.
  Poly frobenius(int e) const;
  /// Rescaled so the leading coefficient is 1 (zero stays zero).
  Poly monic() const;

  std::string to_string() const;

  bool operator==(const Poly& o) const;

 private:
  Poly(RingPtr ring, std::vector<Term> sorted) : ring_(std::move(ring)), terms_(std::move(sorted)) {}

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Free-basis decomposition f = sum_lambda g_lambda^(p^e) x^lambda with
/// 0 <= lambda_i < p^e; zero components are omitted.
std::map<Monomial, Poly, MonomialLexLess> frobenius_decompose(const Poly& f, int e);

/// p^e as a checked 64-bit integer; throws DegreeOverflow past 2^31.
std::int64_t frobenius_exponent(std::uint32_t p, int e);

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& vars);

}  // namespace fsing
