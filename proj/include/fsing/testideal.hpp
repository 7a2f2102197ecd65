#pragma once

#include <optional>
#include <vector>

#include "fsing/frobenius.hpp"
#include "fsing/rational.hpp"

namespace fsing {

struct TauResult {
  /// Ideal of the ambient polynomial ring. For a quotient S/J it is the
  /// preimage of the test ideal, so it contains J.
  Ideal ideal;
  bool stabilized = false;
  int levels_used = 0;
};

/// The pair (S, a^t) over a polynomial ring.
class PairAt {
 public:
  /// Throws QuotientRingUnsupported, or InvalidArgument for a = 0 or t < 0.
  PairAt(RingCtx ring, Ideal a, Rational t);

  const RingCtx& ring() const noexcept { return ring_; }
  const Ideal& a() const noexcept { return a_; }
  const Rational& t() const noexcept { return t_; }

 private:
  RingCtx ring_;
  Ideal a_;
  Rational t_;
};

enum class Rounding {
  TimesQMinusOne,  // a^ceil(t (q - 1))
  TimesQ,          // a^ceil(t q)
};

struct TauOptions {
  int max_levels = 12;
  Rounding rounding = Rounding::TimesQMinusOne;
  unsigned threads = 1;
};

/// Katzman chain J_0 = (c), J_n = J_{n-1} + phi(J_{n-1}^(1/q)). Without c the
/// multiplier u is used; u lies in tau(S, phi) for a polynomial ring S.
/// A user-supplied c yields tau only if c is in tau. Stops at the first
/// fixed point, which is exact, or after `max_iterations`.
TauResult tau_map_pair(const CartierMapSpec& spec, std::optional<Poly> c = std::nullopt,
                       int max_iterations = 64);

/// b^3 for the first partial derivative b of f not in (f).
/// Throws NoTestElementFound when every partial lies in (f).
Poly hypersurface_test_element(const RingCtx& R);

/// tau(R) for R = S/(f) from the chain of phi = Phi(f^(p-1) -) started at
/// (c, f). A polynomial ring gives (1). Throws NotPrincipal, NotIrreducible
/// (f is only checked to be square-free), ZeroTestElement.
TauResult tau_hypersurface(const RingCtx& R, std::optional<Poly> c = std::nullopt,
                           int max_iterations = 64);

/// tau(S, a^t) as the sum over e of eth_root(c a^N_e, e) + eth_root(a^ceil(t q), e),
/// stopping after two consecutive levels add nothing. The second term is
/// tau(a^(ceil(t q)/q)), so it lies in tau(a^t) and reaches it for large e.
TauResult tau_ideal_regular(const PairAt& pair, const TauOptions& options = {});

/// tau(S, a^t b^s), same scheme with c a^N_e b^M_e.
TauResult tau_mixed_regular(const PairAt& first, const PairAt& second, const TauOptions& options = {});

/// Largest r with f^r outside m^[p^e]. Throws NotInMaximal.
std::uint64_t nu_value(const Poly& f, int e, const Ideal& m);

struct FptBounds {
  Rational lower;  // exclusive: nu / q
  Rational upper;  // inclusive: (nu + 1) / q
  /// nu(p^e) for e = 1..e_max.
  std::vector<std::uint64_t> nus;
};

/// fpt(f) in (nu/q, (nu+1)/q] at q = p^e_max, for f in the homogeneous
/// maximal ideal.
FptBounds fpt_bounds(const Poly& f, int e_max);

struct JumpCandidates {
  std::vector<Rational> values;
  Rational resolution;
  bool stabilized = true;
};

/// Grid points k/denom <= t_max where tau(a^t) differs from its value at
/// (k-1)/denom.
JumpCandidates jumping_numbers_grid(const RingCtx& ring, const Ideal& a, const Rational& t_max,
                                    std::uint64_t denom, const TauOptions& options = {});

/// tau(R) = R. Throws NonTerminating if the chain did not settle.
bool is_strongly_f_regular(const RingCtx& R);

}  // namespace fsing
