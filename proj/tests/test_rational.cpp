#include <doctest.h>

#include <random>

#include "hzhu/lambda_poly.hpp"
#include "hzhu/rational.hpp"

using namespace hzhu;

namespace {

Rational factorial_binomial(long n, int k) {
  Integer num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return Rational(num) / Rational(den);
}

Rational eval_poly(const LambdaPoly& p, const std::vector<Rational>& x) {
  Rational s = 0;
  for (const auto& [exps, c] : p.terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < exps.size(); ++i)
      for (int e = 0; e < exps[i]; ++e) t *= x[i];
    s += t;
  }
  return s;
}

}  // namespace

TEST_SUITE("rational") {
  TEST_CASE("printing and parsing") {
    CHECK(to_string(ratio(-35, 32)) == "-35/32");
    CHECK(to_string(ratio(6, 3)) == "2");
    CHECK(ratio(-4, 6) == parse_rational("-2/3"));
    CHECK(parse_rational("315/256") == ratio(315, 256));
    CHECK(parse_rational("-4") == Rational(-4));
    CHECK(parse_rational("6/4") == ratio(3, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("1 /2"), Error);
    CHECK_THROWS_AS(parse_rational(""), Error);
  }

  TEST_CASE("binomials against the factorial formula") {
    for (long n = -6; n <= 9; ++n)
      for (int k = 0; k <= 7; ++k) {
        CHECK(binomial(n, k) == factorial_binomial(n, k));
        CHECK(binomial(Rational(n), k) == factorial_binomial(n, k));
      }
    // C(1/2, 2) = (1/2)(-1/2)/2
    CHECK(binomial(ratio(1, 2), 2) == ratio(-1, 8));
  }

  TEST_CASE("lambda polynomials agree with pointwise evaluation") {
    std::mt19937 gen(7);
    std::uniform_int_distribution<int> d(-3, 3);
    auto random_poly = [&] {
      LambdaPoly p;
      for (int t = 0; t < 4; ++t) p.add_term({d(gen) + 3, d(gen) + 3 > 4 ? 1 : 0, std::abs(d(gen))}, ratio(d(gen), 1 + std::abs(d(gen))));
      return p;
    };
    for (int trial = 0; trial < 30; ++trial) {
      LambdaPoly a = random_poly(), b = random_poly();
      std::vector<Rational> x{Rational(d(gen)), ratio(d(gen), 2), Rational(d(gen) + 5)};
      CHECK(eval_poly(a * b, x) == eval_poly(a, x) * eval_poly(b, x));
      CHECK(eval_poly(a + b, x) == eval_poly(a, x) + eval_poly(b, x));
      CHECK(eval_poly(a - b, x) == eval_poly(a, x) - eval_poly(b, x));
      CHECK(parse_lambda_poly(a.to_string()) == a);
    }
  }

  TEST_CASE("canonical text") {
    LambdaPoly l1 = LambdaPoly::variable(1), l2 = LambdaPoly::variable(2);
    LambdaPoly j = l1 * l1 * l1 * l1 - LambdaPoly(ratio(1, 2)) * l1 * l1;
    CHECK(j.to_string() == "l1^4 - 1/2*l1^2");
    CHECK((l1 * l2).to_string() == "l1*l2");
    CHECK(LambdaPoly().to_string() == "0");
    CHECK((l1 - l1).is_zero());
    CHECK(parse_lambda_poly("l1*l2") == l1 * l2);
  }
}
