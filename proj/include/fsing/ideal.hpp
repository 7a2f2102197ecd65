#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "fsing/poly.hpp"

namespace fsing {

/// Ideal of the ambient polynomial ring, with a lazily filled cache of
/// reduced Groebner bases keyed by monomial order. Copies share the cache;
/// filling it is idempotent and safe from several threads.
class Ideal {
 public:
  /// An empty generator list means the zero ideal.
  Ideal(RingPtr ring, std::vector<Poly> gens);

  static Ideal zero(RingPtr ring);
  static Ideal unit(RingPtr ring);
  /// (x_1, ..., x_n).
  static Ideal maximal(RingPtr ring);

  const RingPtr& ring() const noexcept { return ring_; }
  /// Never empty: the zero ideal is stored as the single generator 0.
  const std::vector<Poly>& gens() const noexcept { return gens_; }

  /// Reduced basis, monic, listed by ascending leading monomial under `order`.
  /// The zero ideal yields {0}. Each Poly is still stored in degrevlex.
  const std::vector<Poly>& groebner(const MonomialOrder& order = MonomialOrder::degrevlex()) const;

  bool is_zero() const;
  bool is_unit() const;
  bool is_monomial() const;

  bool contains(const Poly& f) const;
  bool contains(const Ideal& other) const;
  /// Equality as ideals.
  bool same_as(const Ideal& other) const;

  Ideal operator+(const Ideal& o) const;
  Ideal operator*(const Ideal& o) const;
  Ideal scaled(const Poly& f) const;
  Ideal power(std::uint64_t n) const;

  /// Same ideal with its reduced degrevlex basis as generators.
  Ideal canonical() const;

  /// "(g1, g2, ...)" over the current generators.
  std::string to_string() const;
  /// Reduced degrevlex generators in canonical text form, largest lead first.
  std::vector<std::string> canonical_strings() const;

  /// Install a basis known to be reduced for `order` (used by elimination).
  void seed_basis(const MonomialOrder& order, std::vector<Poly> basis) const;

 private:
  struct Cache {
    std::mutex mu;
    std::vector<std::pair<MonomialOrder, std::shared_ptr<const std::vector<Poly>>>> bases;
  };

  RingPtr ring_;
  std::vector<Poly> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Presentation R = S / J of the ring being studied. A zero J is a plain
/// polynomial ring.
class RingCtx {
 public:
  explicit RingCtx(RingPtr ambient);
  /// Throws InvalidArgument if `defining` is the unit ideal.
  RingCtx(RingPtr ambient, Ideal defining);

  const RingPtr& ambient() const noexcept { return ambient_; }
  bool is_quotient() const noexcept { return quotient_; }
  /// Zero ideal when there is no quotient.
  const Ideal& defining() const noexcept { return defining_; }
  /// I + J, the preimage in S of the extension of I to R.
  Ideal lift(const Ideal& I) const;
  Ideal maximal_ideal() const { return Ideal::maximal(ambient_); }

 private:
  RingPtr ambient_;
  Ideal defining_;
  bool quotient_ = false;
};

/// Ideal generated by monomials; the list is minimalized first.
Ideal monomial_ideal(const RingPtr& ring, std::vector<Monomial> monomials);

std::vector<Poly> groebner(const Ideal& I, const MonomialOrder& order = MonomialOrder::degrevlex());
bool member(const Poly& f, const Ideal& I);
/// Normal form with respect to the degrevlex basis of I.
Poly normal_form(const Poly& f, const Ideal& I);

/// {f : f J subset I}. Throws ZeroDivisorIdeal when J = (0).
Ideal colon(const Ideal& I, const Ideal& J);
Ideal intersect(const Ideal& I, const Ideal& J);

/// dim_k S / I. Throws NotZeroDimensional. The unit ideal has length 0.
std::uint64_t vspace_length(const Ideal& I);
/// Krull dimension of S / J.
std::size_t krull_dim(const RingCtx& R);

}  // namespace fsing
