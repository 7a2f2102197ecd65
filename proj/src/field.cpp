#include "fsing/field.hpp"

#include "fsing/errors.hpp"

namespace fsing {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::BadPrime: return "BadPrime";
    case ErrorKind::TooManyVariables: return "TooManyVariables";
    case ErrorKind::MixedRings: return "MixedRings";
    case ErrorKind::DegreeOverflow: return "DegreeOverflow";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::ZeroDivisorIdeal: return "ZeroDivisorIdeal";
    case ErrorKind::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorKind::QuotientRingUnsupported: return "QuotientRingUnsupported";
    case ErrorKind::InvalidBasisIndex: return "InvalidBasisIndex";
    case ErrorKind::NotMaximal: return "NotMaximal";
    case ErrorKind::NotContaining: return "NotContaining";
    case ErrorKind::ZeroMultiplier: return "ZeroMultiplier";
    case ErrorKind::ZeroTestElement: return "ZeroTestElement";
    case ErrorKind::NotPrincipal: return "NotPrincipal";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::NoTestElementFound: return "NoTestElementFound";
    case ErrorKind::NotInMaximal: return "NotInMaximal";
    case ErrorKind::NotFPure: return "NotFPure";
    case ErrorKind::NotMonomial: return "NotMonomial";
    case ErrorKind::NonTerminating: return "NonTerminating";
  }
  return "Unknown";
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod64(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod64(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses are sufficient for all n < 2^64.
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(0) {
  if (p > kMaxPrime || !is_prime(p)) {
    throw Error(ErrorKind::BadPrime,
                std::to_string(p) + " is not a prime below 2^31");
  }
  p_ = static_cast<std::uint32_t>(p);
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t n) const noexcept {
  std::uint32_t r = 1 % p_;
  while (n) {
    if (n & 1) r = mul(r, a);
    a = mul(a, a);
    n >>= 1;
  }
  return r;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw Error(ErrorKind::InvalidArgument, "inverse of zero in F_p");
  return pow(a, p_ - 2);
}

void FpScalar::check_same(const FpScalar& o) const {
  if (!(field_ == o.field_)) throw Error(ErrorKind::MixedRings, "scalars from different fields");
}

FpScalar FpScalar::operator+(const FpScalar& o) const {
  check_same(o);
  return from_raw(field_, field_.add(value_, o.value_));
}

FpScalar FpScalar::operator-(const FpScalar& o) const {
  check_same(o);
  return from_raw(field_, field_.sub(value_, o.value_));
}

FpScalar FpScalar::operator*(const FpScalar& o) const {
  check_same(o);
  return from_raw(field_, field_.mul(value_, o.value_));
}

std::ostream& operator<<(std::ostream& os, const FpScalar& a) {
  return os << a.value() << " (mod " << a.field().characteristic() << ")";
}

}  // namespace fsing
