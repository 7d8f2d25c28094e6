#pragma once

#include <vector>

#include "hzhu/rational.hpp"

namespace hzhu {

/// Dense bivariate power series in x, y truncated at total degree `degree`.
class BivariateSeries {
public:
  explicit BivariateSeries(int degree);

  int degree() const { return degree_; }
  const Rational& at(int i, int j) const;
  Rational& at(int i, int j);

  /// 1 + ... constant series.
  static BivariateSeries constant(int degree, const Rational& c);
  /// (1 + x)^e (or (1 + y)^e when `in_y`) by the binomial series.
  static BivariateSeries binomial_series(int degree, const Rational& e, bool in_y);

  BivariateSeries& operator+=(const BivariateSeries& o);
  BivariateSeries& operator-=(const BivariateSeries& o);
  BivariateSeries& operator*=(const Rational& c);
  BivariateSeries operator*(const BivariateSeries& o) const;

  /// log(1 + s) for a series s without constant term.
  static BivariateSeries log1p(const BivariateSeries& s);

private:
  int degree_;
  std::vector<Rational> coeffs_;  // row-major (degree+1)^2, entries with i+j > degree stay zero
};

}  // namespace hzhu
