#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fsing/ideal.hpp"

namespace fsing {

enum class ClosureStatus { InClosure, NotInClosure, Inconclusive };

std::string_view to_string(ClosureStatus status);

struct ClosureVerdict {
  ClosureStatus status = ClosureStatus::Inconclusive;
  /// InClosure: the witness level. NotInClosure: the level whose check
  /// failed. Inconclusive: the last level examined.
  int e = 0;
  /// The c that was used, when it matters for the certificate.
  std::optional<Poly> multiplier;
  /// Inconclusive, yet c z^q was in I^[q] at every level examined.
  bool bounded_evidence = false;
  std::string detail;
};

/// Looks for e <= e_max with z^(p^e) in I^[p^e] (plus J in a quotient).
/// Over a polynomial ring a failure is certified, since I^F = I there.
ClosureVerdict frobenius_closure_test(const RingCtx& R, const Poly& z, const Ideal& I, int e_max);

/// Checks c z^(p^e) in I^[p^e] + J for e = 0..e_max. A failure is a proof of
/// z outside I* only when c is in the computed test ideal of R. Passing
/// every level is reported as bounded evidence, never as membership.
/// Throws ZeroMultiplier when c is zero in R.
ClosureVerdict tight_closure_witness(const RingCtx& R, const Poly& z, const Ideal& I, const Poly& c, int e_max);

/// Recomputes every claim of a verdict from scratch.
bool verify_verdict(const RingCtx& R, const Poly& z, const Ideal& I, const ClosureVerdict& verdict);

/// Whether x^v lies in the integral closure of the monomial ideal with
/// minimal generators `gens`: v in conv(gens) + R_{>=0}^n, decided by an
/// exact rational simplex.
bool in_newton_polyhedron(const Monomial& v, const std::vector<Monomial>& gens, std::size_t nvars);

/// Integral closure of a monomial ideal. Throws NotMonomial.
Ideal monomial_integral_closure(const Ideal& I);

/// closure(I^(m+n)) inside I^m, with n the number of minimal generators.
/// Throws NotMonomial.
bool briancon_skoda_check(const Ideal& I, std::uint64_t m);

}  // namespace fsing
