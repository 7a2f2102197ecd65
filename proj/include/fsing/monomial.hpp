#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace fsing {

/// Hard limit on exponent-vector width. One slot is always kept free for the
/// auxiliary variable used by intersection and colon, so user rings get
/// kMaxVars - 1 variables.
inline constexpr std::size_t kMaxVars = 15;
inline constexpr std::size_t kMaxRingVars = kMaxVars - 1;

/// Exponent vector with inline storage. Unused trailing slots are zero, so
/// comparisons never need to know the ambient variable count.
class Monomial {
 public:
  Monomial() = default;
  /// Throws InvalidArgument on negative entries or too many variables.
  explicit Monomial(std::span<const std::int64_t> exponents);
  Monomial(std::initializer_list<std::int64_t> exponents);

  static Monomial variable(std::size_t index, std::int64_t power = 1);

  std::int32_t operator[](std::size_t i) const noexcept { return exp_[i]; }
  std::int32_t degree() const noexcept { return deg_; }
  bool is_one() const noexcept { return deg_ == 0; }

  /// Checked; throws DegreeOverflow at 2^31.
  void set(std::size_t i, std::int64_t value);

  bool divides(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exp_[i] > other.exp_[i]) return false;
    return true;
  }
  bool coprime(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exp_[i] != 0 && other.exp_[i] != 0) return false;
    return true;
  }

  /// Checked product; throws DegreeOverflow.
  Monomial operator*(const Monomial& other) const;
  /// Requires other.divides(*this).
  Monomial operator/(const Monomial& other) const noexcept;
  Monomial lcm(const Monomial& other) const noexcept;
  /// Every exponent multiplied by k; checked.
  Monomial scaled(std::int64_t k) const;

  /// Bit i set iff variable i occurs; a cheap divisibility pre-filter.
  std::uint32_t support_mask() const noexcept {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exp_[i] != 0) m |= (1u << i);
    return m;
  }

  std::vector<std::int64_t> exponents(std::size_t nvars) const;
  std::size_t hash() const noexcept;

  bool operator==(const Monomial& o) const noexcept { return exp_ == o.exp_; }
  /// Plain lexicographic comparison on the raw vector; used for map keys.
  bool lex_less(const Monomial& o) const noexcept { return exp_ < o.exp_; }

 private:
  std::array<std::int32_t, kMaxVars> exp_{};
  std::int32_t deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

struct MonomialLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept { return a.lex_less(b); }
};

/// Multiplicative well-order on monomials with 1 minimal.
class MonomialOrder {
 public:
  enum class Kind { DegRevLex, Lex, Elimination };

  static MonomialOrder degrevlex() { return MonomialOrder(Kind::DegRevLex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  /// Variables [0, split) form a degrevlex block that dominates the degrevlex
  /// block [split, kMaxVars); eliminates the first block.
  static MonomialOrder elimination(int split) { return MonomialOrder(Kind::Elimination, split); }

  Kind kind() const noexcept { return kind_; }
  int split() const noexcept { return split_; }

  /// Negative, zero or positive as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const noexcept;
  bool greater(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
  friend auto operator<=>(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind k, int split) : kind_(k), split_(split) {}
  Kind kind_;
  int split_;
};

}  // namespace fsing
