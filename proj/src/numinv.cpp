#include "fsing/numinv.hpp"

#include "fsing/errors.hpp"
#include "fsing/parallel.hpp"
#include "fsing/testideal.hpp"

namespace fsing {

namespace {

constexpr std::uint64_t kBudget = 10'000'000;

void require_levels(int e_max) {
  if (e_max < 1) throw Error(ErrorKind::InvalidArgument, "e_max must be at least 1");
}

mpz_class pow_mpz(std::uint32_t p, std::uint64_t k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, k);
  return r;
}

InvariantEstimate assemble(std::vector<std::uint64_t> counts, std::uint32_t p, std::size_t d,
                           const Rational& tolerance) {
  InvariantEstimate out;
  out.dimension = d;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    const int e = static_cast<int>(k) + 1;
    Rational ratio(mpz_class(static_cast<unsigned long>(counts[k])), pow_mpz(p, static_cast<std::uint64_t>(e) * d));
    ratio.canonicalize();
    out.levels.push_back({e, counts[k], ratio});
  }
  out.limit_estimate = out.levels.back().ratio;
  if (out.levels.size() >= 2) {
    Rational diff = out.levels.back().ratio - out.levels[out.levels.size() - 2].ratio;
    out.converged_hint = abs(diff) < tolerance;
  }
  return out;
}

}  // namespace

bool exceeds_budget(std::uint32_t p, std::size_t d, int e) {
  return pow_mpz(p, static_cast<std::uint64_t>(e) * d) > kBudget;
}

int default_e_max(std::uint32_t p, std::size_t d) {
  int e = 1;
  while (e < 64 && !exceeds_budget(p, d, e + 1)) ++e;
  return e;
}

InvariantEstimate hk_sequence(const RingCtx& R, const Ideal& I, int e_max, const Rational& tolerance,
                              unsigned threads) {
  require_levels(e_max);
  require_same_ring(R.ambient(), I.ring());
  vspace_length(R.lift(I));  // m-primary check
  const std::size_t d = krull_dim(R);
  std::vector<std::uint64_t> counts =
      parallel_map<std::uint64_t>(static_cast<std::size_t>(e_max), threads, [&](std::size_t k) {
        return vspace_length(R.lift(bracket_power(I, static_cast<int>(k) + 1)));
      });
  return assemble(std::move(counts), R.ambient()->characteristic(), d, tolerance);
}

InvariantEstimate fsig_sequence(const RingCtx& R, int e_max, const Rational& tolerance, unsigned threads) {
  require_levels(e_max);
  const std::size_t d = krull_dim(R);
  std::vector<std::uint64_t> counts =
      parallel_map<std::uint64_t>(static_cast<std::size_t>(e_max), threads, [&](std::size_t k) {
        return vspace_length(splitting_ideal_Ie(R, static_cast<int>(k) + 1));
      });
  return assemble(std::move(counts), R.ambient()->characteristic(), d, tolerance);
}

SplittingPrimeResult splitting_prime_approx(const RingCtx& R, int e_max, unsigned threads) {
  require_levels(e_max);
  const RingPtr& S = R.ambient();
  if (!R.is_quotient()) return SplittingPrimeResult{Ideal::zero(S), true, 0};
  if (!fedder_is_fpure(R.defining(), R.maximal_ideal()))
    throw Error(ErrorKind::NotFPure, "ring is not F-pure at the origin");
  // P = 0 exactly when R is strongly F-regular.
  if (R.defining().groebner().size() == 1 && is_strongly_f_regular(R))
    return SplittingPrimeResult{R.defining().canonical(), true, 0};

  std::vector<Ideal> levels = parallel_map<Ideal>(static_cast<std::size_t>(e_max), threads, [&](std::size_t k) {
    return splitting_ideal_Ie(R, static_cast<int>(k) + 1).canonical();
  });
  Ideal P = levels[0];
  bool settled = false;
  int used = 1;
  for (std::size_t k = 1; k < levels.size(); ++k) {
    Ideal next = intersect(P, levels[k]).canonical();
    settled = next.same_as(P);
    P = next;
    used = static_cast<int>(k) + 1;
    if (settled) break;
  }
  bool compatible = true;
  const Ideal K = fedder_colon(R.defining(), 1);
  for (const Poly& u : K.gens()) {
    if (u.is_zero()) continue;
    if (!P.contains(eth_root(P.scaled(u), 1))) {
      compatible = false;
      break;
    }
  }
  return SplittingPrimeResult{P, settled && compatible, used};
}

}  // namespace fsing
