#pragma once

#include <cstdint>
#include <vector>

#include "fsing/frobenius.hpp"
#include "fsing/rational.hpp"

namespace fsing {

struct InvariantLevel {
  int e = 0;
  std::uint64_t count = 0;
  Rational ratio;  // count / p^(e d)
};

struct InvariantEstimate {
  std::vector<InvariantLevel> levels;
  std::size_t dimension = 0;
  /// The last ratio; never an extrapolation.
  Rational limit_estimate;
  /// |ratio_e - ratio_(e-1)| < tolerance at the last level.
  bool converged_hint = false;
};

/// Largest e >= 1 with p^(e d) <= 10^7, the standard-monomial budget.
int default_e_max(std::uint32_t p, std::size_t d);
bool exceeds_budget(std::uint32_t p, std::size_t d, int e);

/// Lengths of R / I^[p^e] for e = 1..e_max, computed as colengths of
/// I^[p^e] + J in S. Levels run on up to `threads` workers.
InvariantEstimate hk_sequence(const RingCtx& R, const Ideal& I, int e_max,
                              const Rational& tolerance = Rational(1, 100), unsigned threads = 1);

/// Free-rank counts a_e = colength of the splitting ideal I_e.
InvariantEstimate fsig_sequence(const RingCtx& R, int e_max, const Rational& tolerance = Rational(1, 100),
                                unsigned threads = 1);

struct SplittingPrimeResult {
  /// Preimage in S; contains J.
  Ideal ideal;
  bool certified = false;
  int levels_used = 0;
};

/// Intersection of I_1, ..., I_e_max. Certified when the intersection
/// settled across two consecutive levels and is compatible with the
/// level-1 trace twisted by each generator of (J^[p] : J), or when R is
/// strongly F-regular, in which case the prime is (0). Throws NotFPure.
SplittingPrimeResult splitting_prime_approx(const RingCtx& R, int e_max, unsigned threads = 1);

}  // namespace fsing
