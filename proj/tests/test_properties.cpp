#include <doctest.h>

#include "support.hpp"

using namespace hzhu;
using namespace hzhu::testing;

TEST_SUITE("properties") {
  TEST_CASE("products of even vectors are even") {
    for (int ell = 1; ell <= 2; ++ell) {
      auto r = parity_closure(Rank(ell), 4);
      CHECK_MESSAGE(r.ok(), r.failure);
    }
  }

  TEST_CASE("circle elements act as zero on all top levels") {
    for (int ell = 1; ell <= 3; ++ell) {
      auto r = circle_annihilation(Rank(ell));
      CHECK_MESSAGE(r.ok(), r.failure);
    }
  }

  TEST_CASE("evaluation is multiplicative") {
    for (int ell = 1; ell <= 3; ++ell) {
      auto r = star_homomorphism(Rank(ell));
      CHECK_MESSAGE(r.ok(), r.failure);
    }
  }

  TEST_CASE("star and circle agree with the brute-force oracle") {
    auto r1 = oracle_agreement(Rank(1), 4);
    CHECK_MESSAGE(r1.ok(), r1.failure);
    CHECK(r1.checked == 144);
    auto r2 = oracle_agreement(Rank(2), 3);
    CHECK_MESSAGE(r2.ok(), r2.failure);
  }
}
