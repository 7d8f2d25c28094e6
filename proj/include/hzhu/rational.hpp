#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace hzhu {

/// Exact rational scalar used for every coefficient in the library.
using Rational = mpq_class;
using Integer = mpz_class;

/// Base class of all errors raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// "p/q" with q > 1 omitted when the value is an integer.
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q" (no whitespace). Throws Error on bad input.
Rational parse_rational(std::string_view text);

/// Generalized binomial coefficient C(top, k) for rational top and k >= 0.
Rational binomial(const Rational& top, int k);

/// Ordinary binomial C(n, k) for integer n (negative n allowed), k >= 0.
Rational binomial(long n, int k);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// p/q in lowest terms; mpq_class(p, q) alone does not reduce.
inline Rational ratio(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

}  // namespace hzhu
