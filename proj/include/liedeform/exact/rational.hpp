#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

#include "liedeform/errors.hpp"

namespace liedeform {

/// Arbitrary-precision rational. GMP keeps every value canonical (lowest
/// terms, positive denominator) after each arithmetic operation.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  // accept a leading '+', which GMP does not
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0) throw ParseError("not a rational: '" + std::string(text) + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// Exact square root when q is the square of a rational.
inline std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

}  // namespace liedeform
