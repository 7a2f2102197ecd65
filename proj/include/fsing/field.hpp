#pragma once

#include <cstdint>
#include <ostream>

namespace fsing {

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Arithmetic in F_p for a prime p < 2^31, so that a sum of two reduced
/// values never overflows 32 bits and a product fits in 64.
class PrimeField {
 public:
  static constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 31) - 1;

  /// Throws Error(BadPrime) unless p is a prime below 2^31.
  explicit PrimeField(std::uint64_t p);

  std::uint32_t characteristic() const noexcept { return p_; }

  std::uint32_t reduce(std::int64_t a) const noexcept {
    std::int64_t r = a % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t n) const noexcept;
  /// a must be nonzero.
  std::uint32_t inv(std::uint32_t a) const;

  /// Signed representative in (-p/2, p/2], used only for display.
  std::int64_t centered(std::uint32_t a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

/// A fully reduced element of F_p that remembers its modulus.
class FpScalar {
 public:
  FpScalar(const PrimeField& field, std::int64_t value)
      : field_(field), value_(field.reduce(value)) {}

  std::uint32_t value() const noexcept { return value_; }
  const PrimeField& field() const noexcept { return field_; }

  FpScalar operator+(const FpScalar& o) const;
  FpScalar operator-(const FpScalar& o) const;
  FpScalar operator*(const FpScalar& o) const;
  FpScalar operator-() const { return from_raw(field_, field_.neg(value_)); }
  FpScalar pow(std::uint64_t n) const { return from_raw(field_, field_.pow(value_, n)); }
  FpScalar inverse() const { return from_raw(field_, field_.inv(value_)); }

  bool operator==(const FpScalar& o) const { return field_ == o.field_ && value_ == o.value_; }

 private:
  static FpScalar from_raw(const PrimeField& f, std::uint32_t v) { return FpScalar(f, v); }
  void check_same(const FpScalar& o) const;

  PrimeField field_;
  std::uint32_t value_;
};

std::ostream& operator<<(std::ostream& os, const FpScalar& a);

}  // namespace fsing
