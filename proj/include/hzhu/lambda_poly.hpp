#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hzhu/rational.hpp"

namespace hzhu {

/// Multivariate polynomial in l1..lN over the rationals.
///
/// Exponent vectors are stored without trailing zeros, so the same monomial
/// has one representation regardless of how many variables are in scope.
/// Terms are kept in a std::map, which fixes a canonical order; zero
/// coefficients are never stored.
class LambdaPoly {
public:
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, Rational>;

  LambdaPoly() = default;
  LambdaPoly(const Rational& c);  // NOLINT: constants convert implicitly
  LambdaPoly(int c) : LambdaPoly(Rational(c)) {}

  /// The indeterminate l_index (1-based).
  static LambdaPoly variable(int index);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of the constant term.
  Rational constant() const;
  /// Largest variable index that occurs (0 for constants).
  int max_variable() const;

  LambdaPoly& operator+=(const LambdaPoly& o);
  LambdaPoly& operator-=(const LambdaPoly& o);
  LambdaPoly& operator*=(const LambdaPoly& o);
  LambdaPoly& operator*=(const Rational& c);
  LambdaPoly operator-() const;

  friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) { return a += b; }
  friend LambdaPoly operator-(LambdaPoly a, const LambdaPoly& b) { return a -= b; }
  friend LambdaPoly operator*(LambdaPoly a, const LambdaPoly& b) { return a *= b; }
  friend bool operator==(const LambdaPoly& a, const LambdaPoly& b) { return a.terms_ == b.terms_; }

  /// Adds c * monomial(exps).
  void add_term(Exponents exps, const Rational& c);

  /// Canonical text such as "l1^4 - 1/2*l1^2"; "0" for the zero polynomial.
  std::string to_string() const;

private:
  Terms terms_;
};

inline bool is_zero(const LambdaPoly& p) { return p.is_zero(); }
std::string to_string(const LambdaPoly& p);

/// Parses the format produced by LambdaPoly::to_string (and a little more:
/// whitespace, implicit '*' is not accepted). Throws Error.
LambdaPoly parse_lambda_poly(std::string_view text);

}  // namespace hzhu
