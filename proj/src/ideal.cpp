#include "fsing/ideal.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "fsing/errors.hpp"
#include "fsing/groebner.hpp"

namespace fsing {

namespace {

gb::TermVec to_terms(const Poly& f) { return gb::TermVec(f.terms().begin(), f.terms().end()); }

std::vector<gb::TermVec> to_terms(const std::vector<Poly>& fs) {
  std::vector<gb::TermVec> out;
  out.reserve(fs.size());
  for (const Poly& f : fs)
    if (!f.is_zero()) out.push_back(to_terms(f));
  return out;
}

/// Keep only divisibility-minimal monomials, sorted for determinism.
std::vector<Monomial> minimalize(std::vector<Monomial> ms) {
  std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.lex_less(b);
  });
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  std::vector<Monomial> out;
  for (const Monomial& m : ms) {
    bool redundant = false;
    for (const Monomial& k : out)
      if (k.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  return out;
}

Monomial shift_up(const Monomial& m, std::size_t nvars) {
  Monomial r;
  for (std::size_t i = 0; i < nvars; ++i)
    if (m[i]) r.set(i + 1, m[i]);
  return r;
}

Monomial shift_down(const Monomial& m, std::size_t nvars) {
  Monomial r;
  for (std::size_t i = 0; i < nvars; ++i)
    if (m[i + 1]) r.set(i, m[i + 1]);
  return r;
}

bool all_monomial(const std::vector<Poly>& gens) {
  return std::all_of(gens.begin(), gens.end(),
                     [](const Poly& g) { return g.is_zero() || g.is_monomial(); });
}

std::vector<Monomial> monomials_of(const Ideal& I) {
  std::vector<Monomial> ms;
  for (const Poly& g : I.gens())
    if (!g.is_zero()) ms.push_back(g.leading().mono);
  return ms;
}

}  // namespace

// ---------------------------------------------------------------- Ideal

Ideal monomial_ideal(const RingPtr& ring, std::vector<Monomial> monomials) {
  const std::vector<Monomial> ms = minimalize(std::move(monomials));
  std::vector<Poly> gens;
  gens.reserve(ms.size());
  for (const Monomial& m : ms) gens.push_back(Poly::monomial(ring, m));
  Ideal I(ring, gens);
  // A minimal monomial generating set is already the reduced basis.
  I.seed_basis(MonomialOrder::degrevlex(), [&] {
    std::vector<Poly> sorted = gens;
    const MonomialOrder ord = MonomialOrder::degrevlex();
    std::sort(sorted.begin(), sorted.end(), [&](const Poly& a, const Poly& b) {
      return ord.compare(a.leading().mono, b.leading().mono) < 0;
    });
    return sorted;
  }());
  return I;
}


Ideal::Ideal(RingPtr ring, std::vector<Poly> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {
  for (const Poly& g : gens_) require_same_ring(ring_, g.ring());
  std::vector<Poly> nonzero;
  for (Poly& g : gens_)
    if (!g.is_zero()) nonzero.push_back(std::move(g));
  gens_ = std::move(nonzero);
  if (gens_.empty()) gens_.push_back(Poly(ring_));
}

Ideal Ideal::zero(RingPtr ring) { return Ideal(std::move(ring), {}); }

Ideal Ideal::unit(RingPtr ring) {
  Poly one = Poly::constant(ring, 1);
  return Ideal(std::move(ring), {one});
}

Ideal Ideal::maximal(RingPtr ring) {
  std::vector<Monomial> ms;
  for (std::size_t i = 0; i < ring->nvars(); ++i) ms.push_back(Monomial::variable(i));
  return monomial_ideal(ring, ms);
}

void Ideal::seed_basis(const MonomialOrder& order, std::vector<Poly> basis) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  for (const auto& entry : cache_->bases)
    if (entry.first == order) return;
  if (basis.empty()) basis.push_back(Poly(ring_));
  cache_->bases.emplace_back(order, std::make_shared<const std::vector<Poly>>(std::move(basis)));
}

const std::vector<Poly>& Ideal::groebner(const MonomialOrder& order) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    for (const auto& entry : cache_->bases)
      if (entry.first == order) return *entry.second;
  }
  // Computed outside the lock; a racing thread derives the identical basis.
  std::vector<gb::TermVec> basis = gb::reduced_basis(ring_->field(), to_terms(gens_), order);
  std::vector<Poly> polys;
  polys.reserve(basis.size());
  for (gb::TermVec& b : basis) polys.push_back(Poly::from_terms(ring_, std::move(b)));
  if (polys.empty()) polys.push_back(Poly(ring_));
  auto ptr = std::make_shared<const std::vector<Poly>>(std::move(polys));
  std::lock_guard<std::mutex> lock(cache_->mu);
  for (const auto& entry : cache_->bases)
    if (entry.first == order) return *entry.second;
  cache_->bases.emplace_back(order, ptr);
  return *cache_->bases.back().second;
}

bool Ideal::is_zero() const { return gens_.size() == 1 && gens_[0].is_zero(); }

bool Ideal::is_unit() const {
  for (const Poly& g : gens_)
    if (g.is_constant() && !g.is_zero()) return true;
  const auto& b = groebner();
  return b.size() == 1 && b[0].is_constant() && !b[0].is_zero();
}

bool Ideal::is_monomial() const {
  if (all_monomial(gens_)) return true;
  return all_monomial(groebner());
}

bool Ideal::contains(const Poly& f) const { return member(f, *this); }

bool Ideal::contains(const Ideal& other) const {
  require_same_ring(ring_, other.ring_);
  for (const Poly& g : other.gens_)
    if (!member(g, *this)) return false;
  return true;
}

bool Ideal::same_as(const Ideal& other) const {
  require_same_ring(ring_, other.ring_);
  const auto& a = groebner();
  const auto& b = other.groebner();
  return a == b;
}

Ideal Ideal::operator+(const Ideal& o) const {
  require_same_ring(ring_, o.ring_);
  std::vector<Poly> gens = gens_;
  gens.insert(gens.end(), o.gens_.begin(), o.gens_.end());
  if (all_monomial(gens)) {
    std::vector<Monomial> ms = monomials_of(*this);
    for (const Monomial& m : monomials_of(o)) ms.push_back(m);
    return monomial_ideal(ring_, std::move(ms));
  }
  return Ideal(ring_, std::move(gens));
}

Ideal Ideal::operator*(const Ideal& o) const {
  require_same_ring(ring_, o.ring_);
  if (is_zero() || o.is_zero()) return zero(ring_);
  if (all_monomial(gens_) && all_monomial(o.gens_)) {
    std::vector<Monomial> ms;
    for (const Monomial& a : monomials_of(*this))
      for (const Monomial& b : monomials_of(o)) ms.push_back(a * b);
    return monomial_ideal(ring_, std::move(ms));
  }
  std::vector<Poly> gens;
  for (const Poly& a : gens_)
    for (const Poly& b : o.gens_) gens.push_back(a * b);
  // Keep generator lists from exploding by replacing them with a basis.
  Ideal prod(ring_, std::move(gens));
  if (prod.gens().size() > 16) return prod.canonical();
  return prod;
}

Ideal Ideal::scaled(const Poly& f) const {
  require_same_ring(ring_, f.ring());
  std::vector<Poly> gens;
  for (const Poly& g : gens_) gens.push_back(g * f);
  return Ideal(ring_, std::move(gens));
}

Ideal Ideal::power(std::uint64_t n) const {
  if (n == 0) return unit(ring_);
  Ideal result = unit(ring_);
  Ideal base = *this;
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

Ideal Ideal::canonical() const {
  Ideal out(ring_, groebner());
  out.seed_basis(MonomialOrder::degrevlex(), groebner());
  return out;
}

std::string Ideal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].to_string();
  }
  return s + ")";
}

std::vector<std::string> Ideal::canonical_strings() const {
  std::vector<std::string> out;
  const auto& basis = groebner();
  for (auto it = basis.rbegin(); it != basis.rend(); ++it) out.push_back(it->to_string());
  return out;
}

// ---------------------------------------------------------------- RingCtx

RingCtx::RingCtx(RingPtr ambient) : ambient_(ambient), defining_(Ideal::zero(ambient)) {}

RingCtx::RingCtx(RingPtr ambient, Ideal defining)
    : ambient_(ambient), defining_(std::move(defining)) {
  require_same_ring(ambient_, defining_.ring());
  if (defining_.is_unit()) throw Error(ErrorKind::InvalidArgument, "defining ideal is the unit ideal");
  quotient_ = !defining_.is_zero();
}

Ideal RingCtx::lift(const Ideal& I) const {
  require_same_ring(ambient_, I.ring());
  return quotient_ ? I + defining_ : I;
}

// ---------------------------------------------------------------- operations

std::vector<Poly> groebner(const Ideal& I, const MonomialOrder& order) { return I.groebner(order); }

Poly normal_form(const Poly& f, const Ideal& I) {
  require_same_ring(f.ring(), I.ring());
  if (f.is_zero() || I.is_zero()) return f;
  const auto& basis = I.groebner();
  std::vector<gb::TermVec> b = to_terms(basis);
  return Poly::from_terms(f.ring(), gb::normal_form(f.ring()->field(), to_terms(f), b,
                                                    MonomialOrder::degrevlex()));
}

bool member(const Poly& f, const Ideal& I) {
  require_same_ring(f.ring(), I.ring());
  if (f.is_zero()) return true;
  if (I.is_zero()) return false;
  if (all_monomial(I.gens())) {
    // Monomial ideal: every term must be divisible by a generator.
    const std::vector<Monomial> ms = monomials_of(I);
    for (const Term& t : f.terms()) {
      bool hit = std::any_of(ms.begin(), ms.end(), [&](const Monomial& m) { return m.divides(t.mono); });
      if (!hit) return false;
    }
    return true;
  }
  return normal_form(f, I).is_zero();
}

Ideal intersect(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  const RingPtr& ring = I.ring();
  if (I.is_zero() || J.is_zero()) return Ideal::zero(ring);
  if (all_monomial(I.gens()) && all_monomial(J.gens())) {
    std::vector<Monomial> ms;
    for (const Monomial& a : monomials_of(I))
      for (const Monomial& b : monomials_of(J)) ms.push_back(a.lcm(b));
    return monomial_ideal(ring, std::move(ms));
  }
  const std::size_t n = ring->nvars();
  const PrimeField& F = ring->field();
  const Monomial t = Monomial::variable(0);
  std::vector<gb::TermVec> gens;
  // t*I + (1-t)*J with t in slot 0.
  for (const Poly& f : I.groebner()) {
    gb::TermVec v;
    for (const Term& term : f.terms()) v.push_back({shift_up(term.mono, n) * t, term.coeff});
    gens.push_back(std::move(v));
  }
  for (const Poly& g : J.groebner()) {
    gb::TermVec v;
    for (const Term& term : g.terms()) {
      Monomial m = shift_up(term.mono, n);
      v.push_back({m, term.coeff});
      v.push_back({m * t, F.neg(term.coeff)});
    }
    gens.push_back(std::move(v));
  }
  const MonomialOrder elim = MonomialOrder::elimination(1);
  std::vector<gb::TermVec> basis = gb::reduced_basis(F, std::move(gens), elim);
  std::vector<Poly> kept;
  for (const gb::TermVec& b : basis) {
    if (b.front().mono[0] != 0) continue;
    std::vector<Term> terms;
    for (const Term& term : b) terms.push_back({shift_down(term.mono, n), term.coeff});
    kept.push_back(Poly::from_terms(ring, std::move(terms)));
  }
  Ideal out(ring, kept);
  // The t-free part of an elimination basis is the reduced degrevlex basis
  // of the intersection; the second block of the order is degrevlex.
  out.seed_basis(MonomialOrder::degrevlex(), kept);
  return out;
}

Ideal colon(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  const RingPtr& ring = I.ring();
  if (J.is_zero()) throw Error(ErrorKind::ZeroDivisorIdeal, "colon by the zero ideal");
  if (I.is_zero()) return Ideal::zero(ring);
  if (I.is_unit() || J.is_unit()) return I.is_unit() ? Ideal::unit(ring) : I;
  const bool monomial_I = all_monomial(I.gens());
  std::vector<Poly> jgens = J.gens();
  if (jgens.size() > J.groebner().size()) jgens = J.groebner();
  std::optional<Ideal> result;
  for (const Poly& g : jgens) {
    if (g.is_zero()) continue;
    Ideal part = Ideal::unit(ring);
    if (member(g, I)) {
      part = Ideal::unit(ring);
    } else if (monomial_I && g.is_monomial()) {
      std::vector<Monomial> ms;
      const Monomial gm = g.leading().mono;
      for (const Monomial& m : monomials_of(I)) ms.push_back(m.lcm(gm) / gm);
      part = monomial_ideal(ring, std::move(ms));
    } else {
      Ideal inter = intersect(I, Ideal(ring, {g}));
      const PrimeField& F = ring->field();
      std::vector<Poly> quotients;
      for (const Poly& h : inter.groebner()) {
        gb::TermVec q = gb::exact_divide(F, to_terms(h), to_terms(g), MonomialOrder::degrevlex());
        quotients.push_back(Poly::from_terms(ring, std::move(q)));
      }
      part = Ideal(ring, std::move(quotients));
    }
    if (part.is_unit()) continue;
    result = result ? intersect(*result, part) : part;
  }
  return result ? *result : Ideal::unit(ring);
}

std::uint64_t vspace_length(const Ideal& I) {
  const RingPtr& ring = I.ring();
  const std::size_t n = ring->nvars();
  if (I.is_zero()) throw Error(ErrorKind::NotZeroDimensional, "the zero ideal has infinite colength");
  const auto& basis = I.groebner();
  if (basis.size() == 1 && basis[0].is_constant()) return 0;
  std::vector<Monomial> leads;
  for (const Poly& b : basis) leads.push_back(b.leading().mono);
  std::vector<std::int64_t> bound(n, -1);
  for (const Monomial& m : leads) {
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] != 0 && m[i] == m.degree()) {
        if (bound[i] < 0 || m[i] < bound[i]) bound[i] = m[i];
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (bound[i] < 0)
      throw Error(ErrorKind::NotZeroDimensional,
                  "ideal is not zero-dimensional (no pure power of " + ring->vars()[i] + ")");

  const std::size_t last = n - 1;
  std::vector<std::int64_t> cur(n, 0);
  // Leads grouped by the deepest index among the first n-1 variables they
  // involve, so each recursion level only checks the leads it can newly hit.
  std::vector<std::vector<Monomial>> by_depth(n);
  std::vector<Monomial> last_only;
  for (const Monomial& m : leads) {
    int deepest = -1;
    for (std::size_t i = 0; i < last; ++i)
      if (m[i]) deepest = static_cast<int>(i);
    if (deepest < 0)
      last_only.push_back(m);
    else
      by_depth[deepest].push_back(m);
  }
  // Per prefix, the smallest last-variable exponent among leads whose
  // first-n-1 part divides the prefix.
  std::function<std::uint64_t(std::size_t, std::int64_t)> walk = [&](std::size_t depth,
                                                                    std::int64_t cap) -> std::uint64_t {
    if (depth == last) return static_cast<std::uint64_t>(cap);
    std::uint64_t total = 0;
    for (std::int64_t v = 0; v < bound[depth]; ++v) {
      cur[depth] = v;
      std::int64_t c = cap;
      bool dead = false;
      for (const Monomial& m : by_depth[depth]) {
        if (m[depth] > v) continue;
        bool divides = true;
        for (std::size_t i = 0; i < depth; ++i)
          if (m[i] > cur[i]) {
            divides = false;
            break;
          }
        if (!divides) continue;
        if (m[last] == 0) {
          dead = true;
          break;
        }
        c = std::min<std::int64_t>(c, m[last]);
      }
      if (dead || c == 0) break;
      total += walk(depth + 1, c);
    }
    cur[depth] = 0;
    return total;
  };
  std::int64_t cap = bound[last];
  for (const Monomial& m : last_only) cap = std::min<std::int64_t>(cap, m[last]);
  if (n == 1) return static_cast<std::uint64_t>(cap);
  return walk(0, cap);
}

std::size_t krull_dim(const RingCtx& R) {
  const std::size_t n = R.ambient()->nvars();
  if (!R.is_quotient()) return n;
  std::vector<std::uint32_t> masks;
  for (const Poly& b : R.defining().groebner()) masks.push_back(b.leading().mono.support_mask());
  std::size_t best = 0;
  for (std::uint32_t U = 0; U < (1u << n); ++U) {
    std::size_t size = static_cast<std::size_t>(__builtin_popcount(U));
    if (size <= best) continue;
    bool independent = std::none_of(masks.begin(), masks.end(),
                                    [&](std::uint32_t m) { return (m & ~U) == 0; });
    if (independent) best = size;
  }
  return best;
}

}  // namespace fsing
