#include "fsing/testideal.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_set>

#include "fsing/errors.hpp"
#include "fsing/parallel.hpp"

namespace fsing {

namespace {

Poly partial(const Poly& f, std::size_t i) {
  const PrimeField& F = f.ring()->field();
  std::vector<Term> out;
  for (const Term& t : f.terms()) {
    std::int32_t a = t.mono[i];
    if (a == 0) continue;
    std::uint32_t c = F.mul(t.coeff, F.reduce(a));
    if (c == 0) continue;
    Monomial m = t.mono;
    m.set(i, a - 1);
    out.push_back({m, c});
  }
  return Poly::from_terms(f.ring(), std::move(out));
}

bool all_monomial(const std::vector<Poly>& gens) {
  return std::all_of(gens.begin(), gens.end(), [](const Poly& g) { return g.is_zero() || g.is_monomial(); });
}

std::vector<Monomial> monomials_of(const Ideal& a) {
  std::vector<Monomial> out;
  for (const Poly& g : a.groebner())
    if (!g.is_zero()) out.push_back(g.leading().mono);
  return out;
}

/// Exponents of all products of N generators, one per composition of N.
/// Far cheaper than the pairwise work a minimalization of a^N would do.
std::vector<Monomial> power_exponents(const std::vector<Monomial>& gens, std::uint64_t N) {
  std::vector<Monomial> out;
  const std::size_t r = gens.size();
  auto rec = [&](auto&& self, std::size_t i, std::uint64_t left, const Monomial& acc) -> void {
    if (i + 1 == r) {
      out.push_back(acc * gens[i].scaled(static_cast<std::int64_t>(left)));
      return;
    }
    for (std::uint64_t j = 0; j <= left; ++j)
      self(self, i + 1, left - j, acc * gens[i].scaled(static_cast<std::int64_t>(j)));
  };
  rec(rec, 0, N, Monomial());
  return out;
}

struct PowerFactor {
  std::vector<Monomial> gens;
  std::uint64_t n;
};

/// eth_root(x^c * prod a_i^n_i) for monomial a_i, one p-th root at a time.
/// Writing each exponent j = p s + r with r < p, the p-th root of
/// x^c prod a^n is the sum over remainders of x^floor((c + sum r g)/p) times
/// prod a^((n - R)/p), so only small states (c, n) survive between levels.
Ideal monomial_power_root(const RingPtr& ring, const Monomial& c, const std::vector<PowerFactor>& factors,
                          std::uint64_t p, int e) {
  const std::size_t nv = ring->nvars();
  using State = std::pair<std::vector<std::int64_t>, std::vector<std::uint64_t>>;
  std::vector<std::int64_t> c0(nv);
  std::vector<std::uint64_t> n0;
  for (std::size_t i = 0; i < nv; ++i) c0[i] = c[i];
  for (const PowerFactor& f : factors) n0.push_back(f.n);
  std::set<State> states{{c0, n0}};

  for (int level = 0; level < e; ++level) {
    std::set<State> next;
    for (const auto& [cv, nvec] : states) {
      std::vector<std::int64_t> acc = cv;
      std::vector<std::uint64_t> nn(factors.size());
      // factor f, generator i within it, remainder total R so far for f
      auto rec = [&](auto&& self, std::size_t f, std::size_t i, std::uint64_t R) -> void {
        if (f == factors.size()) {
          std::vector<std::int64_t> root(nv);
          for (std::size_t k = 0; k < nv; ++k) root[k] = acc[k] / static_cast<std::int64_t>(p);
          next.emplace(std::move(root), nn);
          return;
        }
        const auto& gens = factors[f].gens;
        if (i == gens.size()) {
          if (R > nvec[f] || (nvec[f] - R) % p != 0) return;
          nn[f] = (nvec[f] - R) / p;
          self(self, f + 1, 0, 0);
          return;
        }
        for (std::uint64_t r = 0; r < p && R + r <= nvec[f]; ++r) {
          for (std::size_t k = 0; k < nv; ++k) acc[k] += static_cast<std::int64_t>(r) * gens[i][k];
          self(self, f, i + 1, R + r);
          for (std::size_t k = 0; k < nv; ++k) acc[k] -= static_cast<std::int64_t>(r) * gens[i][k];
        }
      };
      rec(rec, 0, 0, 0);
    }
    // for equal n, a componentwise larger c only gives a smaller ideal
    std::map<std::vector<std::uint64_t>, std::vector<std::vector<std::int64_t>>> by_n;
    for (const auto& [cv, nvec] : next) by_n[nvec].push_back(cv);
    states.clear();
    for (auto& [nvec, cs] : by_n) {
      for (std::size_t i = 0; i < cs.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < cs.size() && !dominated; ++j) {
          if (i == j) continue;
          bool le = true;
          for (std::size_t k = 0; k < nv && le; ++k) le = cs[j][k] <= cs[i][k];
          dominated = le && cs[j] != cs[i];
        }
        if (!dominated) states.emplace(cs[i], nvec);
      }
    }
  }

  std::unordered_set<Monomial, MonomialHash> gens;
  for (const auto& [cv, nvec] : states) {
    std::vector<Monomial> partial{Monomial(std::span<const std::int64_t>(cv))};
    for (std::size_t f = 0; f < factors.size(); ++f) {
      std::vector<Monomial> grown;
      for (const Monomial& v : power_exponents(factors[f].gens, nvec[f]))
        for (const Monomial& m : partial) grown.push_back(m * v);
      partial = std::move(grown);
    }
    gens.insert(partial.begin(), partial.end());
  }
  return monomial_ideal(ring, std::vector<Monomial>(gens.begin(), gens.end()));
}

/// A generating set of a^N.
std::vector<Poly> power_generators(const Ideal& a, std::uint64_t N) {
  const RingPtr& ring = a.ring();
  if (N == 0) return {Poly::constant(ring, 1)};
  if (all_monomial(a.gens())) return a.power(N).gens();
  std::vector<Poly> gens = a.gens();
  if (a.groebner().size() < gens.size()) gens = a.groebner();
  const std::size_t r = gens.size();
  // powers[i][k] = g_i^k
  std::vector<std::vector<Poly>> powers(r);
  for (std::size_t i = 0; i < r; ++i) {
    powers[i].push_back(Poly::constant(ring, 1));
    for (std::uint64_t k = 1; k <= N; ++k) powers[i].push_back(powers[i].back() * gens[i]);
  }
  std::vector<Poly> out;
  // Enumerate exponent vectors with sum N.
  auto rec = [&](auto&& self, std::size_t i, std::uint64_t left, const Poly& acc) -> void {
    if (i + 1 == r) {
      out.push_back(acc * powers[i][left]);
      return;
    }
    for (std::uint64_t j = 0; j <= left; ++j) self(self, i + 1, left - j, acc * powers[i][j]);
  };
  rec(rec, 0, N, Poly::constant(ring, 1));
  return out;
}

std::uint64_t exponent_for(const Rational& t, std::int64_t q, Rounding rounding) {
  Rational scaled = t * Rational(rounding == Rounding::TimesQ ? q : q - 1);
  return static_cast<std::uint64_t>(ceil_to_int(scaled));
}

template <class T>
std::vector<T> products(const std::vector<T>& xs, const std::vector<T>& ys) {
  std::vector<T> out;
  out.reserve(xs.size() * ys.size());
  for (const T& x : xs)
    for (const T& y : ys) out.push_back(x * y);
  return out;
}

Poly first_generator(const Ideal& a) {
  for (const Poly& g : a.gens())
    if (!g.is_zero()) return g;
  throw Error(ErrorKind::InvalidArgument, "ideal is zero");
}

/// Partial sums of tau terms; level e contributes term(e), level 0 is (c).
TauResult stabilize_sum(const RingPtr& ring, const Poly& c, const TauOptions& options,
                        const std::function<Ideal(int)>& term) {
  Ideal sum = Ideal(ring, {c}).canonical();
  int quiet = 0;
  int e = 1;
  const int cap = std::max(1, options.max_levels);
  while (e <= cap) {
    const int batch = std::min<int>(std::max(1u, options.threads), cap - e + 1);
    const int base = e;
    std::vector<Ideal> terms =
        parallel_map<Ideal>(static_cast<std::size_t>(batch), options.threads,
                            [&](std::size_t k) { return term(base + static_cast<int>(k)); });
    for (const Ideal& t : terms) {
      Ideal next = (sum + t).canonical();
      quiet = next.same_as(sum) ? quiet + 1 : 0;
      sum = next;
      if (quiet >= 2) return TauResult{sum, true, e};
      ++e;
    }
  }
  return TauResult{sum, false, cap};
}

Ideal scaled_eth_root(const Poly& c, const std::vector<Poly>& gens, int e) {
  std::vector<Poly> scaled;
  scaled.reserve(gens.size());
  for (const Poly& g : gens) scaled.push_back(g * c);
  return eth_root(Ideal(c.ring(), std::move(scaled)), e);
}

TauResult katzman(const CartierMapSpec& spec, const Ideal& start, int max_iterations) {
  Ideal J = start.canonical();
  for (int n = 1; n <= max_iterations; ++n) {
    Ideal K = (J + trace_image(J, spec)).canonical();
    if (K.same_as(J)) return TauResult{J, true, n};
    J = K;
  }
  return TauResult{J, false, max_iterations};
}

/// f^r outside the monomial ideal generated by `walls`.
bool power_escapes_monomial(const Poly& f, std::uint64_t r, const std::vector<Monomial>& walls) {
  auto trunc = [&](const Poly& g) {
    std::vector<Term> keep;
    for (const Term& t : g.terms()) {
      bool inside = std::any_of(walls.begin(), walls.end(), [&](const Monomial& w) { return w.divides(t.mono); });
      if (!inside) keep.push_back(t);
    }
    return Poly::from_terms(g.ring(), std::move(keep));
  };
  Poly result = trunc(Poly::constant(f.ring(), 1));
  Poly base = trunc(f);
  while (r) {
    if (result.is_zero()) return false;
    if (r & 1) result = trunc(result * base);
    r >>= 1;
    if (r) base = trunc(base * base);
  }
  return !result.is_zero();
}

class NuOracle {
 public:
  NuOracle(const Poly& f, const Ideal& mq) : f_(f), mq_(mq) {
    monomial_ = all_monomial(mq.gens());
    if (monomial_)
      for (const Poly& g : mq.gens())
        if (!g.is_zero()) walls_.push_back(g.leading().mono);
  }
  bool escapes(std::uint64_t r) const {
    if (monomial_) return power_escapes_monomial(f_, r, walls_);
    return !member(f_.pow(r), mq_);
  }
  /// Largest r in [lo, hi] that escapes, given that lo escapes.
  std::uint64_t largest(std::uint64_t lo, std::uint64_t hi) const {
    while (lo < hi) {
      std::uint64_t mid = lo + (hi - lo + 1) / 2;
      if (escapes(mid))
        lo = mid;
      else
        hi = mid - 1;
    }
    return lo;
  }

 private:
  const Poly& f_;
  const Ideal& mq_;
  bool monomial_ = false;
  std::vector<Monomial> walls_;
};

}  // namespace

PairAt::PairAt(RingCtx ring, Ideal a, Rational t) : ring_(std::move(ring)), a_(std::move(a)), t_(std::move(t)) {
  if (ring_.is_quotient())
    throw Error(ErrorKind::QuotientRingUnsupported, "pairs (R, a^t) are supported over polynomial rings only");
  require_same_ring(ring_.ambient(), a_.ring());
  if (a_.is_zero()) throw Error(ErrorKind::InvalidArgument, "the ideal a must be nonzero");
  if (t_ < 0) throw Error(ErrorKind::InvalidArgument, "t must be non-negative");
}

TauResult tau_map_pair(const CartierMapSpec& spec, std::optional<Poly> c, int max_iterations) {
  if (spec.ring().is_quotient())
    throw Error(ErrorKind::QuotientRingUnsupported, "tau_map_pair needs a polynomial-ring ambient");
  Poly start = c ? *c : spec.multiplier();
  require_same_ring(spec.ring().ambient(), start.ring());
  if (start.is_zero()) throw Error(ErrorKind::ZeroTestElement, "test element must be nonzero");
  return katzman(spec, Ideal(start.ring(), {start}), max_iterations);
}

Poly hypersurface_test_element(const RingCtx& R) {
  const Ideal& J = R.defining();
  const Poly f = J.groebner()[0];
  for (std::size_t i = 0; i < R.ambient()->nvars(); ++i) {
    Poly b = partial(f, i);
    if (!b.is_zero() && !member(b, J)) return b.pow(3);
  }
  throw Error(ErrorKind::NoTestElementFound, "every partial derivative lies in (f); supply a test element");
}

TauResult tau_hypersurface(const RingCtx& R, std::optional<Poly> c, int max_iterations) {
  const RingPtr& S = R.ambient();
  if (!R.is_quotient()) return TauResult{Ideal::unit(S), true, 0};
  const auto& basis = R.defining().groebner();
  if (basis.size() != 1) throw Error(ErrorKind::NotPrincipal, "defining ideal is not principal");
  const Poly f = basis[0];
  std::vector<Poly> jac{f};
  for (std::size_t i = 0; i < S->nvars(); ++i) jac.push_back(partial(f, i));
  Ideal jacobian(S, jac);
  if (!jacobian.is_unit() && krull_dim(RingCtx(S, jacobian)) + 1 >= S->nvars())
    throw Error(ErrorKind::NotIrreducible, "defining polynomial is not square-free");
  Poly start = c ? *c : hypersurface_test_element(R);
  require_same_ring(S, start.ring());
  if (member(start, R.defining())) throw Error(ErrorKind::ZeroTestElement, "test element is zero in R");
  const std::uint64_t p = S->characteristic();
  CartierMapSpec spec(RingCtx(S), 1, f.pow(p - 1));
  return katzman(spec, Ideal(S, {start, f}), max_iterations);
}

TauResult tau_ideal_regular(const PairAt& pair, const TauOptions& options) {
  const RingPtr& S = pair.ring().ambient();
  if (pair.t() == 0) return TauResult{Ideal::unit(S), true, 0};
  const std::uint64_t p = S->characteristic();
  const Poly c = first_generator(pair.a()).pow(static_cast<std::uint64_t>(ceil_to_int(pair.t())));
  if (pair.a().is_monomial()) {
    const std::vector<Monomial> gens = monomials_of(pair.a());
    const Monomial cm = gens[0].scaled(ceil_to_int(pair.t()));
    return stabilize_sum(S, Poly::monomial(S, cm), options, [&](int e) {
      const std::int64_t q = frobenius_exponent(static_cast<std::uint32_t>(p), e);
      const std::uint64_t N = exponent_for(pair.t(), q, options.rounding);
      const std::uint64_t M = exponent_for(pair.t(), q, Rounding::TimesQ);
      return monomial_power_root(S, cm, {{gens, N}}, p, e) + monomial_power_root(S, Monomial(), {{gens, M}}, p, e);
    });
  }
  return stabilize_sum(S, c, options, [&](int e) {
    const std::int64_t q = frobenius_exponent(static_cast<std::uint32_t>(p), e);
    return scaled_eth_root(c, power_generators(pair.a(), exponent_for(pair.t(), q, options.rounding)), e) +
           eth_root(Ideal(S, power_generators(pair.a(), exponent_for(pair.t(), q, Rounding::TimesQ))), e);
  });
}

TauResult tau_mixed_regular(const PairAt& first, const PairAt& second, const TauOptions& options) {
  const RingPtr& S = first.ring().ambient();
  require_same_ring(S, second.ring().ambient());
  if (first.t() == 0) return tau_ideal_regular(second, options);
  if (second.t() == 0) return tau_ideal_regular(first, options);
  const std::uint64_t p = S->characteristic();
  const Poly c = first_generator(first.a()).pow(static_cast<std::uint64_t>(ceil_to_int(first.t()))) *
                 first_generator(second.a()).pow(static_cast<std::uint64_t>(ceil_to_int(second.t())));
  if (first.a().is_monomial() && second.a().is_monomial()) {
    const std::vector<Monomial> a = monomials_of(first.a()), b = monomials_of(second.a());
    const Monomial cm = a[0].scaled(ceil_to_int(first.t())) * b[0].scaled(ceil_to_int(second.t()));
    return stabilize_sum(S, Poly::monomial(S, cm), options, [&](int e) {
      const std::int64_t q = frobenius_exponent(static_cast<std::uint32_t>(p), e);
      auto factors = [&](Rounding rounding) {
        return std::vector<PowerFactor>{{a, exponent_for(first.t(), q, rounding)},
                                        {b, exponent_for(second.t(), q, rounding)}};
      };
      return monomial_power_root(S, cm, factors(options.rounding), p, e) +
             monomial_power_root(S, Monomial(), factors(Rounding::TimesQ), p, e);
    });
  }
  return stabilize_sum(S, c, options, [&](int e) {
    const std::int64_t q = frobenius_exponent(static_cast<std::uint32_t>(p), e);
    auto gens_at = [&](Rounding rounding) {
      return products(power_generators(first.a(), exponent_for(first.t(), q, rounding)),
                      power_generators(second.a(), exponent_for(second.t(), q, rounding)));
    };
    return scaled_eth_root(c, gens_at(options.rounding), e) + eth_root(Ideal(S, gens_at(Rounding::TimesQ)), e);
  });
}

std::uint64_t nu_value(const Poly& f, int e, const Ideal& m) {
  require_same_ring(f.ring(), m.ring());
  if (f.is_zero()) throw Error(ErrorKind::InvalidArgument, "nu of the zero polynomial");
  if (!member(f, m)) throw Error(ErrorKind::NotInMaximal, "f does not lie in the maximal ideal");
  const std::int64_t q = frobenius_exponent(f.ring()->characteristic(), e);
  const Ideal mq = bracket_power(m, e);
  NuOracle oracle(f, mq);
  // m^(n(q-1)+1) lies in m^[q] for n generators.
  const std::uint64_t n = m.gens().size();
  return oracle.largest(0, n * static_cast<std::uint64_t>(q - 1));
}

FptBounds fpt_bounds(const Poly& f, int e_max) {
  if (e_max < 1) throw Error(ErrorKind::InvalidArgument, "e_max must be at least 1");
  const Ideal m = Ideal::maximal(f.ring());
  const std::uint64_t p = f.ring()->characteristic();
  FptBounds out;
  std::uint64_t nu = nu_value(f, 1, m);
  out.nus.push_back(nu);
  for (int e = 2; e <= e_max; ++e) {
    // nu(pq) lies in [p nu(q), p (nu(q) + 1) - 1].
    const Ideal mq = bracket_power(m, e);
    NuOracle oracle(f, mq);
    nu = oracle.largest(p * nu, p * (nu + 1) - 1);
    out.nus.push_back(nu);
  }
  const std::int64_t q = frobenius_exponent(static_cast<std::uint32_t>(p), e_max);
  out.lower = Rational(mpz_class(static_cast<unsigned long>(nu)), mpz_class(static_cast<unsigned long>(q)));
  out.upper = Rational(mpz_class(static_cast<unsigned long>(nu + 1)), mpz_class(static_cast<unsigned long>(q)));
  out.lower.canonicalize();
  out.upper.canonicalize();
  return out;
}

JumpCandidates jumping_numbers_grid(const RingCtx& ring, const Ideal& a, const Rational& t_max,
                                    std::uint64_t denom, const TauOptions& options) {
  if (denom == 0) throw Error(ErrorKind::InvalidArgument, "grid denominator must be positive");
  JumpCandidates out;
  out.resolution = Rational(1, static_cast<unsigned long>(denom));
  if (t_max < 0) return out;
  const std::int64_t K = floor_to_int(t_max * Rational(static_cast<unsigned long>(denom)));
  TauOptions inner = options;
  inner.threads = 1;
  std::vector<TauResult> taus = parallel_map<TauResult>(
      static_cast<std::size_t>(K), options.threads, [&](std::size_t k) {
        Rational t(static_cast<unsigned long>(k + 1), static_cast<unsigned long>(denom));
        t.canonicalize();
        return tau_ideal_regular(PairAt(ring, a, t), inner);
      });
  Ideal previous = Ideal::unit(ring.ambient());
  for (std::size_t k = 0; k < taus.size(); ++k) {
    out.stabilized = out.stabilized && taus[k].stabilized;
    if (!taus[k].ideal.same_as(previous)) {
      Rational t(static_cast<unsigned long>(k + 1), static_cast<unsigned long>(denom));
      t.canonicalize();
      out.values.push_back(t);
    }
    previous = taus[k].ideal;
  }
  return out;
}

bool is_strongly_f_regular(const RingCtx& R) {
  if (!R.is_quotient()) return true;
  TauResult tau = tau_hypersurface(R);
  if (tau.ideal.is_unit()) return true;
  if (!tau.stabilized) throw Error(ErrorKind::NonTerminating, "test ideal chain did not stabilize");
  return false;
}

}  // namespace fsing
