#pragma once

#include <random>
#include <string>
#include <vector>

#include "fsing/closures.hpp"
#include "fsing/ideal.hpp"
#include "fsing/rational.hpp"
#include "fsing/parse.hpp"

namespace fsing::testing {

inline RingPtr ring(std::uint64_t p, std::vector<std::string> vars = {"x", "y", "z"}) {
  return make_ring(p, std::move(vars));
}

inline Poly P(const RingPtr& r, std::string_view s) { return parse_poly(r, s); }

inline Ideal I(const RingPtr& r, std::string_view s) { return Ideal(r, parse_poly_list(r, s)); }

inline Ideal I(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Poly> ps;
  for (const char* g : gens) ps.push_back(parse_poly(r, g));
  return Ideal(r, std::move(ps));
}

inline std::vector<std::string> strings(const Ideal& J) { return J.canonical_strings(); }

inline Poly random_poly(const RingPtr& r, std::mt19937& rng, int max_deg, int terms) {
  std::uniform_int_distribution<int> ed(0, max_deg);
  std::uniform_int_distribution<std::int64_t> cd(1, r->characteristic() - 1);
  std::vector<Term> ts;
  for (int k = 0; k < terms; ++k) {
    Monomial m;
    for (std::size_t i = 0; i < r->nvars(); ++i) m.set(i, ed(rng));
    ts.push_back(Term{m, static_cast<std::uint32_t>(cd(rng))});
  }
  return Poly::from_terms(r, std::move(ts));
}

inline Monomial random_monomial(std::size_t n, std::mt19937& rng, int max_exp) {
  std::uniform_int_distribution<int> ed(0, max_exp);
  Monomial m;
  for (std::size_t i = 0; i < n; ++i) m.set(i, ed(rng));
  return m;
}

/// Monomials in n variables of total degree < bound, in a fixed order.
inline std::vector<Monomial> monomials_below(std::size_t n, int bound) {
  std::vector<Monomial> out;
  Monomial m;
  auto walk = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == n) {
      out.push_back(m);
      return;
    }
    for (int a = 0; a < left; ++a) {
      m.set(i, a);
      self(self, i + 1, left - a);
    }
    m.set(i, 0);
  };
  walk(walk, 0, bound);
  return out;
}

/// Monomials with every exponent below q.
inline std::vector<Monomial> box_monomials(std::size_t n, std::int64_t q) {
  std::vector<Monomial> out;
  Monomial m;
  auto walk = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      out.push_back(m);
      return;
    }
    for (std::int64_t a = 0; a < q; ++a) {
      m.set(i, a);
      self(self, i + 1);
    }
    m.set(i, 0);
  };
  walk(walk, 0);
  return out;
}

/// Incremental row echelon form over F_p, columns indexed by position.
class Echelon {
 public:
  Echelon(std::uint32_t p, std::size_t cols) : p_(p), cols_(cols) {}

  /// Adds a row; returns whether it raised the rank.
  bool add(std::vector<std::uint32_t> row) {
    reduce(row);
    std::size_t lead = 0;
    while (lead < cols_ && row[lead] == 0) ++lead;
    if (lead == cols_) return false;
    const std::uint64_t inv = inverse(row[lead]);
    for (auto& v : row) v = static_cast<std::uint32_t>(v * inv % p_);
    rows_.push_back(std::move(row));
    leads_.push_back(lead);
    return true;
  }
  bool in_span(std::vector<std::uint32_t> row) const {
    reduce(row);
    for (auto v : row)
      if (v) return false;
    return true;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  void reduce(std::vector<std::uint32_t>& row) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const std::uint32_t c = row[leads_[k]];
      if (!c) continue;
      for (std::size_t j = 0; j < cols_; ++j)
        row[j] = static_cast<std::uint32_t>((row[j] + (p_ - c) * std::uint64_t{rows_[k][j]}) % p_);
    }
  }
  std::uint64_t inverse(std::uint64_t a) const {
    std::uint64_t r = 1, e = p_ - 2;
    while (e) {
      if (e & 1) r = r * a % p_;
      a = a * a % p_;
      e >>= 1;
    }
    return r;
  }
  std::uint32_t p_;
  std::size_t cols_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<std::size_t> leads_;
};

/// Coefficient vector of f on the listed monomials; other terms are dropped.
inline std::vector<std::uint32_t> coords(const Poly& f, const std::vector<Monomial>& basis) {
  std::vector<std::uint32_t> v(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) v[i] = f.coefficient(basis[i]);
  return v;
}

/// tau(a^t) for a monomial ideal from the Newton polyhedron: x^v is in it
/// iff v + 1 lies in the interior of t Newt(a). Interior membership is
/// tested as v + 1 - (1/N, ..., 1/N) in t Newt(a), which is exact as long as
/// N exceeds denom(t) times the coefficient sum of every facet normal; the
/// callers keep exponents at most 4 in at most 3 variables, so N = 1000 does.
inline Ideal newton_tau_oracle(const RingPtr& r, const std::vector<Monomial>& gens, const Rational& t) {
  const std::size_t n = r->nvars();
  if (sgn(t) == 0) return Ideal::unit(r);
  const std::int64_t N = 1000;
  const std::int64_t a = t.get_num().get_si(), b = t.get_den().get_si();
  std::vector<Monomial> scaled;
  for (const Monomial& g : gens) scaled.push_back(g.scaled(N * a));
  std::vector<std::int64_t> box(n, 0);
  for (const Monomial& g : gens)
    for (std::size_t i = 0; i < n; ++i) box[i] = std::max<std::int64_t>(box[i], g[i]);
  std::vector<Monomial> found;
  Monomial v;
  auto walk = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      Monomial w;
      for (std::size_t k = 0; k < n; ++k) w.set(k, N * b * (v[k] + 1) - b);
      if (in_newton_polyhedron(w, scaled, n)) found.push_back(v);
      return;
    }
    const std::int64_t top = (box[i] * a + b - 1) / b + 1;
    for (std::int64_t x = 0; x <= top; ++x) {
      v.set(i, x);
      self(self, i + 1);
    }
    v.set(i, 0);
  };
  walk(walk, 0);
  return monomial_ideal(r, found);
}

}  // namespace fsing::testing
