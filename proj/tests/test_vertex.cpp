#include <doctest.h>

#include <random>

#include "hzhu/vertex.hpp"
#include "support.hpp"

using namespace hzhu;
using namespace hzhu::testing;

TEST_SUITE("vertex") {
  TEST_CASE("the field of h_a(-1) is h_a(z)") {
    Rank r(2);
    auto vs = basis_vectors(r, 3, ParityFilter::All);
    for (int a = 1; a <= 2; ++a) {
      FockVector h(Sector::Untwisted, parse_monomial("h" + std::to_string(a) + "(-1)"));
      for (const auto& v : vs)
        for (int n = -3; n <= 3; ++n) CHECK(mode_operator(h, n, v) == apply_mode(a, 2 * n, v));
    }
  }

  TEST_CASE("vacuum field and creation property") {
    auto vs = basis_vectors(Rank(2), 3, ParityFilter::All);
    for (const auto& v : vs) {
      CHECK(mode_operator(FockVector::vacuum(), -1, v) == v);
      CHECK(mode_operator(FockVector::vacuum(), 0, v).is_zero());
      CHECK(mode_operator(v, -1, FockVector::vacuum()) == v);
    }
  }

  TEST_CASE("mode operators against the iterate-formula oracle") {
    Rank r(2);
    auto us = basis_vectors(r, 3, ParityFilter::All);
    auto vs = basis_vectors(r, 2, ParityFilter::All);
    for (const auto& u : us)
      for (const auto& v : vs)
        for (int n = -3; n <= 4; ++n) CHECK(mode_operator(u, n, v) == oracle_mode(u, n, v));
  }

  TEST_CASE("L(0) grades by weight, L_a(0) by the h_a content") {
    Rank r(3);
    for (const auto& v : basis_vectors(r, 4, ParityFilter::All)) {
      const Monomial& m = v.terms().begin()->first;
      CHECK(virasoro_total(r, 0, v) == ratio(m.weight2(), 2) * v);
      int w1 = 0;
      for (const auto& mode : m.modes())
        if (mode.gen == 1) w1 -= mode.twice / 2;
      CHECK(virasoro<Rational>(1, 0, v) == Rational(w1) * v);
    }
  }

  TEST_CASE("Virasoro relations with central charge one per generator") {
    Rank r(2);
    std::mt19937 gen(11);
    auto vs = basis_vectors(r, 3, ParityFilter::All);
    for (int trial = 0; trial < 6; ++trial) {
      const FockVector& v = vs[gen() % vs.size()];
      for (int m = -2; m <= 3; ++m)
        for (int n = -2; n <= 3; ++n) {
          FockVector lhs = virasoro_total(r, m, virasoro_total(r, n, v)) - virasoro_total(r, n, virasoro_total(r, m, v));
          FockVector rhs = Rational(m - n) * virasoro_total(r, m + n, v);
          if (m + n == 0) rhs += ratio(2 * (m * m * m - m), 12) * v;
          CHECK(lhs == rhs);
        }
    }
  }

  TEST_CASE("L(-1) acts as the derivative") {
    // (L(-1)u)_n = -n u_{n-1}
    Rank r(2);
    auto us = basis_vectors(r, 3, ParityFilter::All);
    auto vs = basis_vectors(r, 2, ParityFilter::All);
    for (const auto& u : us)
      for (const auto& v : vs)
        for (int n = -2; n <= 3; ++n)
          CHECK(mode_operator(virasoro_total(r, -1, u), n, v) == Rational(-n) * mode_operator(u, n - 1, v));
  }

  TEST_CASE("zero mode of omega on M(1, lambda)") {
    std::vector<LambdaPoly> lambda{LambdaPoly::variable(1), LambdaPoly::variable(2)};
    PolyFockVector vac = PolyFockVector::vacuum();
    PolyFockVector got = zero_mode<LambdaPoly>(omega(1), vac, &lambda);
    CHECK(got == PolyFockVector(Sector::Untwisted, Monomial{}, LambdaPoly(ratio(1, 2)) * lambda[0] * lambda[0]));
  }
}
