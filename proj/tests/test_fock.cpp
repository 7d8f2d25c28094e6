#include <doctest.h>

#include <functional>
#include <random>

#include "hzhu/fock.hpp"

using namespace hzhu;

namespace {

// Multisets of (generator, part) with parts from `parts`, by direct recursion.
long count_multisets(int ell, const std::vector<int>& parts, int target2, int parity) {
  std::vector<std::pair<int, int>> kinds;
  for (int g = 1; g <= ell; ++g)
    for (int p : parts) kinds.emplace_back(g, p);
  std::function<long(std::size_t, int, int)> go = [&](std::size_t i, int left, int len) -> long {
    if (left == 0) return parity == 0 || (len % 2 == 0) == (parity > 0) ? 1 : 0;
    if (i == kinds.size()) return 0;
    long total = 0;
    for (int k = 0; k * kinds[i].second <= left; ++k) total += go(i + 1, left - k * kinds[i].second, len + k);
    return total;
  };
  return go(0, target2, 0);
}

FockVector random_vector(std::mt19937& gen, Rank rank, int max_wt) {
  FockVector v;
  std::uniform_int_distribution<int> wt(0, max_wt), coef(-5, 5);
  for (int t = 0; t < 4; ++t) {
    auto b = basis(rank, Sector::Untwisted, HalfInteger::from_integer(wt(gen)), ParityFilter::All);
    std::uniform_int_distribution<std::size_t> pick(0, b.size() - 1);
    v.add_term(b[pick(gen)], ratio(coef(gen), 3));
  }
  return v;
}

}  // namespace

TEST_SUITE("fock") {
  TEST_CASE("weight-space dimensions against a direct count") {
    for (int ell = 1; ell <= 3; ++ell) {
      Rank r(ell);
      std::vector<int> ints{2, 4, 6, 8, 10, 12}, halves{1, 3, 5, 7, 9, 11};
      for (int w2 = 0; w2 <= 12; w2 += 2) {
        for (auto [filter, par] : {std::pair{ParityFilter::All, 0}, std::pair{ParityFilter::Even, 1},
                                   std::pair{ParityFilter::Odd, -1}}) {
          long expect = count_multisets(ell, ints, w2, par);
          HalfInteger w{w2};
          CHECK(static_cast<long>(basis(r, Sector::Untwisted, w, filter).size()) == expect);
          CHECK(basis_dimension(r, Sector::Untwisted, w, filter) == expect);
        }
      }
      for (int w2 = 0; w2 <= 11; ++w2) {
        long expect = count_multisets(ell, halves, w2, 0);
        CHECK(static_cast<long>(basis(r, Sector::Twisted, HalfInteger{w2}, ParityFilter::All).size()) == expect);
        CHECK(basis_dimension(r, Sector::Twisted, HalfInteger{w2}, ParityFilter::All) == expect);
      }
    }
  }

  TEST_CASE("monomial order and text") {
    Monomial m = parse_monomial("h1(-1)h2(-2)h1(-3)");
    CHECK(to_string(m) == "h1(-3)h1(-1)h2(-2)");
    CHECK(m.weight().twice == 12);
    CHECK(m.sector_mask() == 2);
    CHECK(m.parity() == -1);
    CHECK(to_string(Monomial{}) == "one");
    Sector s;
    Monomial t = parse_monomial("h2(-1/2)h1(-3/2)", &s);
    CHECK(s == Sector::Twisted);
    CHECK(to_string(t) == "h1(-3/2)h2(-1/2)");
    // weight first, then lexicographic
    auto b = basis(Rank(1), Sector::Untwisted, HalfInteger::from_integer(3), ParityFilter::All);
    for (std::size_t i = 1; i < b.size(); ++i) CHECK(b[i - 1] < b[i]);
    CHECK(parse_monomial("h1(-1)") < parse_monomial("h1(-1)h1(-1)"));
    CHECK_THROWS_AS(make_monomial(Rank(1), Sector::Untwisted, std::vector<Mode>{Mode::integral(2, -1)}), Error);
    CHECK_THROWS_AS(make_monomial(Rank(2), Sector::Untwisted, std::vector<Mode>{Mode{1, -1}}), Error);
  }

  TEST_CASE("vector text round trip") {
    FockVector v = parse_fock_vector("1/2*h1(-1)h1(-1) - one");
    CHECK(v.coefficient(Monomial{}) == -1);
    CHECK(parse_fock_vector(to_string(v)) == v);
    CHECK(to_string(FockVector()) == "0");
  }

  TEST_CASE("oscillator commutation relations") {
    std::mt19937 gen(3);
    Rank r(2);
    for (int trial = 0; trial < 20; ++trial) {
      FockVector v = random_vector(gen, r, 4);
      for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b)
          for (int m = -3; m <= 3; ++m)
            for (int n = -3; n <= 3; ++n) {
              FockVector lhs = apply_mode(a, 2 * m, apply_mode(b, 2 * n, v)) - apply_mode(b, 2 * n, apply_mode(a, 2 * m, v));
              FockVector rhs = (a == b && m + n == 0) ? Rational(m) * v : FockVector();
              CHECK(lhs == rhs);
            }
    }
  }

  TEST_CASE("twisted commutation relations") {
    FockVector v(Sector::Twisted, parse_monomial("h1(-3/2)h1(-1/2)h1(-1/2)"));
    for (int m2 = -5; m2 <= 5; m2 += 2)
      for (int n2 = -5; n2 <= 5; n2 += 2) {
        FockVector lhs = apply_mode(1, m2, apply_mode(1, n2, v)) - apply_mode(1, n2, apply_mode(1, m2, v));
        FockVector rhs = m2 + n2 == 0 ? ratio(m2, 2) * v : FockVector(Sector::Twisted);
        CHECK(lhs == rhs);
      }
  }

  TEST_CASE("theta and parity") {
    FockVector v = parse_fock_vector("h1(-1) + h1(-1)h2(-1)");
    CHECK(theta(v) == parse_fock_vector("-h1(-1) + h1(-1)h2(-1)"));
    CHECK_FALSE(is_even(v));
    CHECK(is_even(parse_fock_vector("h1(-2)h1(-1) + 3*one")));
  }
}
