#include "hzhu/series.hpp"

namespace hzhu {

BivariateSeries::BivariateSeries(int degree) : degree_(degree) {
  if (degree < 0) throw Error("negative series degree");
  coeffs_.assign(static_cast<std::size_t>(degree + 1) * (degree + 1), Rational(0));
}

const Rational& BivariateSeries::at(int i, int j) const {
  return coeffs_[static_cast<std::size_t>(i) * (degree_ + 1) + j];
}

Rational& BivariateSeries::at(int i, int j) { return coeffs_[static_cast<std::size_t>(i) * (degree_ + 1) + j]; }

BivariateSeries BivariateSeries::constant(int degree, const Rational& c) {
  BivariateSeries s(degree);
  s.at(0, 0) = c;
  return s;
}

BivariateSeries BivariateSeries::binomial_series(int degree, const Rational& e, bool in_y) {
  BivariateSeries s(degree);
  for (int k = 0; k <= degree; ++k) {
    if (in_y) {
      s.at(0, k) = binomial(e, k);
    } else {
      s.at(k, 0) = binomial(e, k);
    }
  }
  return s;
}

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& o) {
  if (o.degree_ != degree_) throw Error("series degree mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

BivariateSeries& BivariateSeries::operator-=(const BivariateSeries& o) {
  if (o.degree_ != degree_) throw Error("series degree mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

BivariateSeries& BivariateSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

BivariateSeries BivariateSeries::operator*(const BivariateSeries& o) const {
  if (o.degree_ != degree_) throw Error("series degree mismatch");
  BivariateSeries r(degree_);
  for (int i1 = 0; i1 <= degree_; ++i1) {
    for (int j1 = 0; i1 + j1 <= degree_; ++j1) {
      const Rational& a = at(i1, j1);
      if (sgn(a) == 0) continue;
      for (int i2 = 0; i1 + j1 + i2 <= degree_; ++i2) {
        for (int j2 = 0; i1 + j1 + i2 + j2 <= degree_; ++j2) {
          const Rational& b = o.at(i2, j2);
          if (sgn(b) != 0) r.at(i1 + i2, j1 + j2) += a * b;
        }
      }
    }
  }
  return r;
}

BivariateSeries BivariateSeries::log1p(const BivariateSeries& s) {
  if (sgn(s.at(0, 0)) != 0) throw Error("log1p needs a series without constant term");
  BivariateSeries result(s.degree_);
  BivariateSeries power = s;
  // s^k vanishes beyond the truncation once k > degree.
  for (int k = 1; k <= s.degree_; ++k) {
    BivariateSeries term = power;
    term *= Rational(k % 2 == 1 ? 1 : -1, k);
    result += term;
    power = power * s;
  }
  return result;
}

}  // namespace hzhu
