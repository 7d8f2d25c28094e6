#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "hzhu/vertex.hpp"
#include "hzhu/zhu.hpp"
#include "support.hpp"

using namespace hzhu;
using namespace hzhu::testing;

namespace {

FockVector mono(const char* s) { return FockVector(Sector::Untwisted, parse_monomial(s)); }

}  // namespace

TEST_SUITE("zhu") {
  TEST_CASE("named generators") {
    Rank r(2);
    CHECK(named_omega(r, 1) == ratio(1, 2) * mono("h1(-1)h1(-1)"));
    CHECK(named_J(r, 2) == parse_fock_vector("h2(-1)h2(-1)h2(-1)h2(-1) - 2*h2(-3)h2(-1) + 3/2*h2(-2)h2(-2)"));
    CHECK(named_H(r, 1) == named_J(r, 1) + named_omega(r, 1) - 4 * star(named_omega(r, 1), named_omega(r, 1)));
    CHECK(named_S(r, 1, 2, 2, 3) == mono("h1(-2)h2(-3)"));
    CHECK(named_element("S(1,1;2,3)", r).realization == mono("h1(-1)h2(-3)"));
    CHECK(named_S_alpha(Rank(4), {1, 2, 3, 4}) == star(named_S(Rank(4), 1, 1, 2, 1), named_S(Rank(4), 3, 1, 4, 1)));
    CHECK_THROWS_AS(named_omega(r, 3), Error);
    CHECK_THROWS_AS(named_Eu(r, 1, 1), Error);
    CHECK_THROWS_AS(named_element("Q(1)", r), Error);
  }

  TEST_CASE("star and circle products against the oracle") {
    Rank r(2);
    std::vector<FockVector> us{named_omega(r, 1), named_J(r, 1), named_S(r, 1, 1, 2, 2), mono("h1(-2)h2(-1)")};
    std::vector<FockVector> vs{FockVector::vacuum(), mono("h1(-1)h2(-1)"), named_omega(r, 2), mono("h2(-3)h2(-1)")};
    for (const auto& u : us)
      for (const auto& v : vs) {
        CHECK(star(u, v) == oracle_star(u, v));
        for (int n = 0; n <= 2; ++n) CHECK(circ_n(u, v, n) == oracle_circ(u, v, n));
      }
  }

  TEST_CASE("oracle is sensitive") {
    FockVector u = mono("h1(-1)h1(-1)");
    CHECK_FALSE(oracle_star(u, u) == oracle_circ(u, u, 0));
    CHECK_FALSE(oracle_star(u, u) == star(u, mono("h1(-2)h1(-1)")));
  }

  TEST_CASE("vacuum is a left identity; star powers") {
    Rank r(2);
    for (const auto& u : basis_vectors(r, 4, ParityFilter::Even)) CHECK(star(FockVector::vacuum(), u) == u);
    FockVector w = named_omega(r, 1);
    CHECK(star_power(w, 0) == FockVector::vacuum());
    CHECK(star_power(w, 1) == w);
    CHECK(star_power(w, 3) == star(star(w, w), w));
  }

  TEST_CASE("O-span: circle elements reduce to zero, generators do not") {
    Rank r(2);
    OSpanEchelon e(r, 6, 2);
    auto vs = basis_vectors(r, 3, ParityFilter::Even);
    for (const auto& u : vs)
      for (const auto& v : vs) {
        FockVector c = circ_n(u, v, 0);
        if (max_weight(c).twice > 12) continue;
        CHECK(e.reduce(c).is_zero());
      }
    // (L(-1) + L(0)) v lies in O
    for (const auto& v : basis_vectors(r, 5, ParityFilter::Even))
      CHECK(e.reduce(virasoro_total(r, -1, v) + virasoro_total(r, 0, v)).is_zero());
    CHECK_FALSE(e.reduce(named_omega(r, 1)).is_zero());
    CHECK_FALSE(e.reduce(FockVector::vacuum()).is_zero());
    CHECK_THROWS_AS(e.reduce(mono("h1(-4)h1(-3)")), Error);
    CHECK_THROWS_AS(e.reduce(mono("h1(-1)")), Error);
    CHECK_FALSE(e.provenance(0).empty());
  }

  TEST_CASE("O-span: normal forms are idempotent and linear") {
    Rank r(2);
    OSpanEchelon e(r, 5, 2);
    auto vs = basis_vectors(r, 5, ParityFilter::Even);
    for (std::size_t i = 0; i + 1 < vs.size(); i += 3) {
      FockVector nf = e.reduce(vs[i]);
      CHECK(e.reduce(nf) == nf);
      CHECK(e.reduce(vs[i] + ratio(2, 3) * vs[i + 1]) == nf + ratio(2, 3) * e.reduce(vs[i + 1]));
    }
  }

  TEST_CASE("is_equiv and express_modulo") {
    Rank r(2);
    auto e = build_ospan(r, 4, 2);
    // u * w_a ~ (L_a(-2) + L_a(-1)) u
    FockVector u = mono("h1(-1)h2(-1)");
    FockVector w = named_omega(r, 1);
    CHECK(is_equiv(star(u, w), virasoro<Rational>(1, -2, u) + virasoro<Rational>(1, -1, u), *e) ==
          Verdict::ProvedEqual);
    CHECK(is_equiv(w, FockVector(), *e) == Verdict::Unknown);
    // S(2,1) ~ -S(1,2) - 2 S(1,1) in the quotient
    std::vector<FockVector> b{named_S(r, 1, 1, 2, 1), named_S(r, 1, 1, 2, 2)};
    auto c = express_modulo(named_S(r, 1, 2, 2, 1), b, *e);
    REQUIRE(c.has_value());
    CHECK((*c)[0] == -2);
    CHECK((*c)[1] == -1);
  }

  TEST_CASE("block cache round trip") {
    auto dir = std::filesystem::temp_directory_path() / "hzhu-test-ospan";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    setenv("HZHU_CACHE_DIR", dir.c_str(), 1);
    Rank r(2);
    FockVector x = star(named_S(r, 1, 1, 2, 1), named_omega(r, 1));
    FockVector first, second;
    {
      OSpanEchelon e(r, 4, 2);
      first = e.reduce(x);
      CHECK(e.cache_hits() == 0);
    }
    {
      OSpanEchelon e(r, 4, 2);
      second = e.reduce(x);
      CHECK(e.cache_hits() >= 1);
    }
    CHECK(first == second);
    // corrupted files are ignored and rebuilt
    for (const auto& f : std::filesystem::directory_iterator(dir)) {
      std::ofstream out(f.path(), std::ios::trunc);
      out << "garbage\n";
    }
    {
      OSpanEchelon e(r, 4, 2);
      CHECK(e.reduce(x) == first);
      CHECK(e.cache_hits() == 0);
    }
    unsetenv("HZHU_CACHE_DIR");
    std::filesystem::remove_all(dir);
  }
}
