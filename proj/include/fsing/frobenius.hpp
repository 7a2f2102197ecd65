#pragma once

#include <map>

#include "fsing/ideal.hpp"

namespace fsing {

/// I^[p^e]: generated by the p^e-th powers of the generators.
Ideal bracket_power(const Ideal& I, int e);

/// I^[1/p^e], the smallest ideal J of the polynomial ring with I in J^[p^e].
Ideal eth_root(const Ideal& I, int e);
/// Same, but refuses quotient presentations (QuotientRingUnsupported).
Ideal eth_root(const RingCtx& R, const Ideal& I, int e);

/// phi(-) = Phi^e(u^(1/p^e) * -), where Phi^e is the trace sending the basis
/// element (x_1...x_n)^((p^e-1)/p^e) to 1 and every other one to 0.
class CartierMapSpec {
 public:
  /// Throws ZeroMultiplier when u = 0, and InvalidArgument when R is a
  /// quotient S/J and u is outside (J^[p^e] : J).
  CartierMapSpec(RingCtx ring, int e, Poly u);

  const RingCtx& ring() const noexcept { return ring_; }
  int level() const noexcept { return e_; }
  const Poly& multiplier() const noexcept { return u_; }

  /// phi^m, which lives at level e*m with multiplier u^(1 + q + ... + q^(m-1)).
  CartierMapSpec power(int m) const;

 private:
  RingCtx ring_;
  int e_;
  Poly u_;
};

/// Phi^e(f^(1/p^e)): the component of f on the top basis monomial x^(q-1).
Poly trace(const Poly& f, int e);

/// phi(f^(1/p^e)) for a single element.
Poly apply_map(const CartierMapSpec& spec, const Poly& f);

/// phi(I^(1/p^e)) = eth_root(u I, e). Polynomial rings only.
Ideal trace_image(const Ideal& I, const CartierMapSpec& spec);

/// Builds the multiplier of the map with phi(x^(lambda/p^e)) = images[lambda];
/// absent basis indices map to 0. Throws InvalidBasisIndex and, if every
/// image is zero, ZeroMultiplier.
CartierMapSpec hom_to_multiplier(const RingCtx& ring, const std::map<Monomial, Poly, MonomialLexLess>& images,
                                 int e);

/// (J^[p^e] : J). For principal J = (f) this is (f^(p^e - 1)).
Ideal fedder_colon(const Ideal& J, int e);

/// Fedder's criterion at the maximal ideal m: (S/J)_m is F-pure iff
/// (J^[p] : J) is not inside m^[p]. Throws NotMaximal, NotContaining.
bool fedder_is_fpure(const Ideal& J, const Ideal& m);

/// Preimage in S of I_e, computed as (m^[q] : (J^[q] : J)) with m the
/// homogeneous maximal ideal; a_e is its colength.
Ideal splitting_ideal_Ie(const RingCtx& R, int e);

}  // namespace fsing
