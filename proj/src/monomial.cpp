#include "fsing/monomial.hpp"

#include <limits>

#include "fsing/errors.hpp"

namespace fsing {

namespace {

constexpr std::int64_t kLimit = std::numeric_limits<std::int32_t>::max();

[[noreturn]] void overflow() {
  throw Error(ErrorKind::DegreeOverflow, "exponent or degree reached 2^31");
}

int revlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

Monomial::Monomial(std::span<const std::int64_t> exponents) {
  if (exponents.size() > kMaxVars)
    throw Error(ErrorKind::TooManyVariables, "monomial wider than " + std::to_string(kMaxVars));
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent");
    set(i, exponents[i]);
  }
}

Monomial::Monomial(std::initializer_list<std::int64_t> exponents)
    : Monomial(std::span<const std::int64_t>(exponents.begin(), exponents.size())) {}

Monomial Monomial::variable(std::size_t index, std::int64_t power) {
  if (index >= kMaxVars) throw Error(ErrorKind::TooManyVariables, "variable index out of range");
  Monomial m;
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, std::int64_t value) {
  if (value < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent");
  std::int64_t deg = static_cast<std::int64_t>(deg_) - exp_[i] + value;
  if (value > kLimit || deg > kLimit) overflow();
  exp_[i] = static_cast<std::int32_t>(value);
  deg_ = static_cast<std::int32_t>(deg);
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  if (static_cast<std::int64_t>(deg_) + other.deg_ > kLimit) overflow();
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp_[i] = exp_[i] + other.exp_[i];
  r.deg_ = deg_ + other.deg_;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const noexcept {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp_[i] = exp_[i] - other.exp_[i];
  r.deg_ = deg_ - other.deg_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const noexcept {
  Monomial r;
  std::int32_t d = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exp_[i] = exp_[i] > other.exp_[i] ? exp_[i] : other.exp_[i];
    d += r.exp_[i];
  }
  r.deg_ = d;
  return r;
}

Monomial Monomial::scaled(std::int64_t k) const {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "negative scale");
  if (deg_ != 0 && k > kLimit / deg_) overflow();
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp_[i] = static_cast<std::int32_t>(exp_[i] * k);
  r.deg_ = static_cast<std::int32_t>(deg_ * k);
  return r;
}

std::vector<std::int64_t> Monomial::exponents(std::size_t nvars) const {
  return std::vector<std::int64_t>(exp_.begin(), exp_.begin() + static_cast<std::ptrdiff_t>(nvars));
}

std::size_t Monomial::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (std::int32_t e : exp_) {
    h ^= static_cast<std::uint32_t>(e);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const noexcept {
  switch (kind_) {
    case Kind::DegRevLex:
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      return revlex_range(a, b, 0, kMaxVars);
    case Kind::Lex:
      for (std::size_t i = 0; i < kMaxVars; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case Kind::Elimination: {
      const auto split = static_cast<std::size_t>(split_);
      std::int64_t da = 0, db = 0;
      for (std::size_t i = 0; i < split; ++i) {
        da += a[i];
        db += b[i];
      }
      if (da != db) return da < db ? -1 : 1;
      if (int c = revlex_range(a, b, 0, split)) return c;
      std::int64_t ra = a.degree() - da, rb = b.degree() - db;
      if (ra != rb) return ra < rb ? -1 : 1;
      return revlex_range(a, b, split, kMaxVars);
    }
  }
  return 0;
}

}  // namespace fsing
