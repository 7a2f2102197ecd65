#include "fsing/rational.hpp"

#include <cctype>
#include <cstdio>

#include "fsing/errors.hpp"

namespace fsing {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::int64_t to_int64(const mpz_class& z) {
  static const mpz_class limit = mpz_class(1) << 62;
  if (z > limit || z < -limit) throw Error(ErrorKind::DegreeOverflow, "rational rounds past 2^62");
  return z.get_si();
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body, den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den))
    throw Error(ErrorKind::InvalidArgument, "not a rational number: '" + std::string(text) + "'");
  mpz_class n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

std::string fraction_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string decimal_string(const Rational& r) {
  // mpf with generous precision, then printf-style rounding.
  mpf_class f(r, 256);
  char buf[64];
  gmp_snprintf(buf, sizeof buf, "%.15Fg", f.get_mpf_t());
  return buf;
}

std::int64_t ceil_to_int(const Rational& r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return to_int64(q);
}

std::int64_t floor_to_int(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return to_int64(q);
}

}  // namespace fsing
