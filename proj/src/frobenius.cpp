#include "fsing/frobenius.hpp"

#include <algorithm>
#include <optional>

#include "fsing/errors.hpp"

namespace fsing {

namespace {

void require_level(int e) {
  if (e < 1) throw Error(ErrorKind::InvalidArgument, "Frobenius level e must be at least 1");
}

bool poly_less(const Poly& a, const Poly& b) {
  const MonomialOrder ord = MonomialOrder::degrevlex();
  const auto& x = a.terms();
  const auto& y = b.terms();
  for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
    if (int c = ord.compare(x[i].mono, y[i].mono)) return c < 0;
    if (x[i].coeff != y[i].coeff) return x[i].coeff < y[i].coeff;
  }
  return x.size() < y.size();
}

/// Ideal from a generator list: duplicates dropped, monomial lists
/// minimalized, long lists replaced by their reduced basis.
Ideal tidy(const RingPtr& ring, std::vector<Poly> gens) {
  for (Poly& g : gens) g = g.monic();
  std::sort(gens.begin(), gens.end(), poly_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  bool monomial = std::all_of(gens.begin(), gens.end(),
                              [](const Poly& g) { return g.is_zero() || g.is_monomial(); });
  if (monomial) {
    std::vector<Monomial> ms;
    for (const Poly& g : gens)
      if (!g.is_zero()) ms.push_back(g.leading().mono);
    return monomial_ideal(ring, std::move(ms));
  }
  Ideal I(ring, std::move(gens));
  if (I.gens().size() > 24) return I.canonical();
  return I;
}

std::optional<Poly> principal_generator(const Ideal& J) {
  if (J.gens().size() == 1) return J.gens()[0];
  const auto& basis = J.groebner();
  if (basis.size() == 1) return basis[0];
  return std::nullopt;
}

}  // namespace

Ideal bracket_power(const Ideal& I, int e) {
  require_level(e);
  std::vector<Poly> gens;
  gens.reserve(I.gens().size());
  for (const Poly& g : I.gens()) gens.push_back(g.frobenius(e));
  bool monomial = std::all_of(gens.begin(), gens.end(),
                              [](const Poly& g) { return g.is_zero() || g.is_monomial(); });
  if (monomial) {
    std::vector<Monomial> ms;
    for (const Poly& g : gens)
      if (!g.is_zero()) ms.push_back(g.leading().mono);
    return monomial_ideal(I.ring(), std::move(ms));
  }
  return Ideal(I.ring(), std::move(gens));
}

Ideal eth_root(const Ideal& I, int e) {
  require_level(e);
  if (I.is_zero()) return I;
  std::vector<Poly> comps;
  for (const Poly& g : I.gens()) {
    if (g.is_zero()) continue;
    for (auto& [lambda, part] : frobenius_decompose(g, e)) comps.push_back(std::move(part));
  }
  return tidy(I.ring(), std::move(comps));
}

Ideal eth_root(const RingCtx& R, const Ideal& I, int e) {
  if (R.is_quotient())
    throw Error(ErrorKind::QuotientRingUnsupported, "e-th roots are only defined here over a polynomial ring");
  require_same_ring(R.ambient(), I.ring());
  return eth_root(I, e);
}

CartierMapSpec::CartierMapSpec(RingCtx ring, int e, Poly u) : ring_(std::move(ring)), e_(e), u_(std::move(u)) {
  require_level(e);
  require_same_ring(ring_.ambient(), u_.ring());
  if (u_.is_zero()) throw Error(ErrorKind::ZeroMultiplier, "map multiplier u must be nonzero");
  if (ring_.is_quotient() && !member(u_, fedder_colon(ring_.defining(), e_)))
    throw Error(ErrorKind::InvalidArgument,
                "multiplier does not satisfy u in (J^[q] : J), so the map does not descend");
}

CartierMapSpec CartierMapSpec::power(int m) const {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "map power must be at least 1");
  // phi^m has multiplier u^(1 + q + ... + q^(m-1)) = prod_k (u^(q^k)).
  Poly acc = u_;
  Poly place = u_;
  for (int k = 1; k < m; ++k) {
    place = place.frobenius(e_);
    acc = acc * place;
  }
  return CartierMapSpec(ring_, e_ * m, acc);
}

Poly trace(const Poly& f, int e) {
  require_level(e);
  const RingPtr& ring = f.ring();
  const std::int64_t q = frobenius_exponent(ring->characteristic(), e);
  const std::size_t n = ring->nvars();
  std::vector<Term> out;
  for (const Term& t : f.terms()) {
    bool top = true;
    for (std::size_t i = 0; i < n && top; ++i) top = (t.mono[i] % q) == q - 1;
    if (!top) continue;
    Monomial root;
    for (std::size_t i = 0; i < n; ++i) root.set(i, t.mono[i] / q);
    out.push_back({root, t.coeff});
  }
  return Poly::from_terms(ring, std::move(out));
}

Poly apply_map(const CartierMapSpec& spec, const Poly& f) {
  return trace(spec.multiplier() * f, spec.level());
}

Ideal trace_image(const Ideal& I, const CartierMapSpec& spec) {
  if (spec.ring().is_quotient())
    throw Error(ErrorKind::QuotientRingUnsupported, "trace_image needs a polynomial-ring ambient");
  require_same_ring(spec.ring().ambient(), I.ring());
  if (I.is_zero()) throw Error(ErrorKind::InvalidArgument, "trace_image of the zero ideal");
  return eth_root(I.scaled(spec.multiplier()), spec.level());
}

CartierMapSpec hom_to_multiplier(const RingCtx& ring, const std::map<Monomial, Poly, MonomialLexLess>& images,
                                 int e) {
  require_level(e);
  const RingPtr& S = ring.ambient();
  const std::int64_t q = frobenius_exponent(S->characteristic(), e);
  const std::size_t n = S->nvars();
  Poly u(S);
  for (const auto& [lambda, image] : images) {
    require_same_ring(S, image.ring());
    Monomial complement;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (i >= n) {
        if (lambda[i] != 0) throw Error(ErrorKind::InvalidBasisIndex, "basis index has too many entries");
        continue;
      }
      if (lambda[i] >= q)
        throw Error(ErrorKind::InvalidBasisIndex, "basis index entries must lie in [0, p^e - 1]");
      complement.set(i, q - 1 - lambda[i]);
    }
    u = u + image.frobenius(e).times(complement);
  }
  if (u.is_zero()) throw Error(ErrorKind::ZeroMultiplier, "every basis image is zero");
  CartierMapSpec spec(ring, e, u);
  for (const auto& [lambda, image] : images) {
    if (!(apply_map(spec, Poly::monomial(S, lambda)) == image))
      throw Error(ErrorKind::InvalidArgument, "internal check failed: multiplier does not reproduce images");
  }
  return spec;
}

Ideal fedder_colon(const Ideal& J, int e) {
  require_level(e);
  if (J.is_zero()) return Ideal::unit(J.ring());
  const std::int64_t q = frobenius_exponent(J.ring()->characteristic(), e);
  if (auto f = principal_generator(J)) return Ideal(J.ring(), {f->pow(static_cast<std::uint64_t>(q - 1))});
  return colon(bracket_power(J, e), J);
}

bool fedder_is_fpure(const Ideal& J, const Ideal& m) {
  require_same_ring(J.ring(), m.ring());
  std::uint64_t len = 0;
  try {
    len = vspace_length(m);
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::NotZeroDimensional) throw;
    throw Error(ErrorKind::NotMaximal, "ideal is not maximal (infinite colength)");
  }
  if (len != 1) throw Error(ErrorKind::NotMaximal, "ideal is not a rational maximal ideal");
  if (!m.contains(J)) throw Error(ErrorKind::NotContaining, "maximal ideal does not contain the defining ideal");
  if (J.is_zero()) return true;
  const Ideal mp = bracket_power(m, 1);
  const Ideal K = fedder_colon(J, 1);
  for (const Poly& g : K.gens())
    if (!member(g, mp)) return true;
  return false;
}

Ideal splitting_ideal_Ie(const RingCtx& R, int e) {
  require_level(e);
  const Ideal mq = bracket_power(R.maximal_ideal(), e);
  if (!R.is_quotient()) return mq;
  return colon(mq, fedder_colon(R.defining(), e));
}

}  // namespace fsing
