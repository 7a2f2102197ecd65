#include "fsing/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

#include "fsing/errors.hpp"
#include "fsing/parse.hpp"

namespace fsing {

namespace {

const MonomialOrder kStorageOrder = MonomialOrder::degrevlex();

bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

PolyRing::PolyRing(std::uint64_t p, std::vector<std::string> vars)
    : field_(p), vars_(std::move(vars)) {
  if (vars_.empty()) throw Error(ErrorKind::InvalidArgument, "ring needs at least one variable");
  if (vars_.size() > kMaxRingVars)
    throw Error(ErrorKind::TooManyVariables,
                "at most " + std::to_string(kMaxRingVars) + " variables are supported");
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (!valid_identifier(vars_[i]))
      throw Error(ErrorKind::InvalidArgument, "invalid variable name '" + vars_[i] + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (vars_[i] == vars_[j])
        throw Error(ErrorKind::InvalidArgument, "duplicate variable '" + vars_[i] + "'");
  }
}

std::optional<std::size_t> PolyRing::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

RingPtr make_ring(std::uint64_t p, std::vector<std::string> vars) {
  return std::make_shared<const PolyRing>(p, std::move(vars));
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) throw Error(ErrorKind::MixedRings, "operands live in different rings");
}

Poly Poly::constant(RingPtr ring, std::int64_t c) {
  std::uint32_t v = ring->field().reduce(c);
  Poly r(std::move(ring));
  if (v != 0) r.terms_.push_back({Monomial{}, v});
  return r;
}

Poly Poly::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw Error(ErrorKind::InvalidArgument, "variable index out of range");
  return monomial(std::move(ring), Monomial::variable(index), 1);
}

Poly Poly::monomial(RingPtr ring, const Monomial& m, std::int64_t c) {
  std::uint32_t v = ring->field().reduce(c);
  Poly r(std::move(ring));
  if (v != 0) r.terms_.push_back({m, v});
  return r;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
  const PrimeField& F = ring->field();
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return kStorageOrder.greater(a.mono, b.mono);
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const Term& t : terms) {
    std::uint32_t c = t.coeff % F.characteristic();
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = F.add(out.back().coeff, c);
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back({t.mono, c});
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return Poly(std::move(ring), std::move(out));
}

Poly Poly::parse(RingPtr ring, std::string_view text) { return parse_poly(ring, text); }

std::int32_t Poly::total_degree() const noexcept {
  std::int32_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

std::uint32_t Poly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
    return kStorageOrder.greater(t.mono, key);
  });
  return (it != terms_.end() && it->mono == m) ? it->coeff : 0;
}

Poly Poly::operator+(const Poly& o) const {
  require_same_ring(ring_, o.ring_);
  const PrimeField& F = ring_->field();
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), ae = terms_.end();
  auto b = o.terms_.begin(), be = o.terms_.end();
  while (a != ae && b != be) {
    int c = kStorageOrder.compare(a->mono, b->mono);
    if (c > 0) {
      out.push_back(*a++);
    } else if (c < 0) {
      out.push_back(*b++);
    } else {
      std::uint32_t s = F.add(a->coeff, b->coeff);
      if (s != 0) out.push_back({a->mono, s});
      ++a;
      ++b;
    }
  }
  out.insert(out.end(), a, ae);
  out.insert(out.end(), b, be);
  return Poly(ring_, std::move(out));
}

Poly Poly::operator-() const {
  const PrimeField& F = ring_->field();
  std::vector<Term> out = terms_;
  for (Term& t : out) t.coeff = F.neg(t.coeff);
  return Poly(ring_, std::move(out));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  require_same_ring(ring_, o.ring_);
  if (is_zero() || o.is_zero()) return Poly(ring_);
  if (o.terms_.size() == 1) return times(o.terms_[0].mono, o.terms_[0].coeff);
  if (terms_.size() == 1) return o.times(terms_[0].mono, terms_[0].coeff);
  const PrimeField& F = ring_->field();
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const Term& s : terms_) {
    for (const Term& t : o.terms_) {
      auto [it, inserted] = acc.try_emplace(s.mono * t.mono, 0u);
      it->second = F.add(it->second, F.mul(s.coeff, t.coeff));
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (const auto& [m, c] : acc)
    if (c != 0) out.push_back({m, c});
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) {
    return kStorageOrder.greater(a.mono, b.mono);
  });
  return Poly(ring_, std::move(out));
}

Poly Poly::scaled(std::uint32_t c) const {
  const PrimeField& F = ring_->field();
  c %= F.characteristic();
  if (c == 0) return Poly(ring_);
  std::vector<Term> out = terms_;
  for (Term& t : out) t.coeff = F.mul(t.coeff, c);
  return Poly(ring_, std::move(out));
}

Poly Poly::times(const Monomial& m, std::uint32_t c) const {
  const PrimeField& F = ring_->field();
  c %= F.characteristic();
  if (c == 0) return Poly(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  // Multiplying by a monomial preserves any monomial order.
  for (const Term& t : terms_) out.push_back({t.mono * m, F.mul(t.coeff, c)});
  return Poly(ring_, std::move(out));
}

Poly Poly::frobenius(int e) const {
  const std::int64_t q = frobenius_exponent(ring_->characteristic(), e);
  std::vector<Term> out;
  out.reserve(terms_.size());
  // c^q = c in F_p, and x -> x^q preserves degrevlex.
  for (const Term& t : terms_) out.push_back({t.mono.scaled(q), t.coeff});
  return Poly(ring_, std::move(out));
}

Poly Poly::pow(std::uint64_t n) const {
  Poly result = constant(ring_, 1);
  if (n == 0) return result;
  if (is_zero()) return *this;
  const std::uint64_t p = ring_->characteristic();
  Poly place = *this;  // f^(p^i)
  while (n > 0) {
    std::uint64_t digit = n % p;
    n /= p;
    if (digit > 0) {
      Poly acc = constant(ring_, 1);
      Poly base = place;
      std::uint64_t d = digit;
      while (d) {
        if (d & 1) acc = acc * base;
        d >>= 1;
        if (d) base = base * base;
      }
      result = result * acc;
    }
    if (n > 0) place = place.frobenius(1);
  }
  return result;
}

Poly Poly::monic() const {
  if (is_zero() || terms_[0].coeff == 1) return *this;
  return scaled(ring_->field().inv(terms_[0].coeff));
}

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& vars) {
  std::string s;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += vars[i];
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const Term& t : terms_) {
    if (!s.empty()) s += " + ";
    if (t.mono.is_one()) {
      s += std::to_string(t.coeff);
    } else {
      if (t.coeff != 1) s += std::to_string(t.coeff) + "*";
      s += monomial_to_string(t.mono, ring_->vars());
    }
  }
  return s;
}

bool Poly::operator==(const Poly& o) const {
  if (!(ring_ == o.ring_ || (ring_ && o.ring_ && *ring_ == *o.ring_))) return false;
  return terms_ == o.terms_;
}

std::int64_t frobenius_exponent(std::uint32_t p, int e) {
  if (e < 0) throw Error(ErrorKind::InvalidArgument, "negative Frobenius level");
  std::int64_t q = 1;
  for (int i = 0; i < e; ++i) {
    q *= p;
    if (q > (std::int64_t{1} << 31)) throw Error(ErrorKind::DegreeOverflow, "p^e exceeds 2^31");
  }
  return q;
}

std::map<Monomial, Poly, MonomialLexLess> frobenius_decompose(const Poly& f, int e) {
  if (e < 1) throw Error(ErrorKind::InvalidArgument, "frobenius_decompose needs e >= 1");
  const RingPtr& ring = f.ring();
  const std::int64_t q = frobenius_exponent(ring->characteristic(), e);
  std::map<Monomial, std::vector<Term>, MonomialLexLess> parts;
  for (const Term& t : f.terms()) {
    Monomial lambda, root;
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
      lambda.set(i, t.mono[i] % q);
      root.set(i, t.mono[i] / q);
    }
    // The q-th root of a coefficient in F_p is the coefficient itself.
    parts[lambda].push_back({root, t.coeff});
  }
  std::map<Monomial, Poly, MonomialLexLess> out;
  for (auto& [lambda, terms] : parts) out.emplace(lambda, Poly::from_terms(ring, std::move(terms)));
  return out;
}

}  // namespace fsing
