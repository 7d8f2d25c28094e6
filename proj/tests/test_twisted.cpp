#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "hzhu/series.hpp"
#include "hzhu/twisted.hpp"
#include "hzhu/vertex.hpp"

using namespace hzhu;

namespace {

Rational central_binomial(int k) { return binomial(static_cast<long>(2 * k), k); }

}  // namespace

TEST_SUITE("twisted") {
  TEST_CASE("log1p of a one-variable series") {
    BivariateSeries s(8);
    s.at(1, 0) = 1;
    BivariateSeries l = BivariateSeries::log1p(s);
    for (int k = 1; k <= 8; ++k) CHECK(l.at(k, 0) == ratio(k % 2 ? 1 : -1, k));
    CHECK(l.at(0, 1) == 0);
  }

  TEST_CASE("binomial series squares back") {
    BivariateSeries s = BivariateSeries::binomial_series(10, ratio(1, 2), false);
    BivariateSeries sq = s * s;
    CHECK(sq.at(0, 0) == 1);
    CHECK(sq.at(1, 0) == 1);
    for (int k = 2; k <= 10; ++k) CHECK(sq.at(k, 0) == 0);
  }

  TEST_CASE("Delta coefficients: closed forms") {
    DeltaTable t = delta_coefficients(16);
    CHECK(t.is_symmetric());
    CHECK(t.at(1, 1) == ratio(1, 16));
    for (int k = 1; k <= 15; ++k) {
      // coefficient of x^k in -log((1 + sqrt(1+x)) / 2); the table itself keeps m, n >= 1 only
      Rational ck0 = central_binomial(k) / (2 * k);
      for (int i = 0; i < k; ++i) ck0 *= ratio(-1, 4);
      CHECK(t.at(k, 0) == 0);
      // x = y collapses the series to -log(sqrt(1+x))
      Rational diagonal_sum = 0;
      for (int m = 1; m < k; ++m) diagonal_sum += t.at(m, k - m);
      CHECK(diagonal_sum == ratio(k % 2 ? -1 : 1, 2 * k) - 2 * ck0);
    }
    CHECK(t.at(0, 0) == 0);
    CHECK(t.at(10, 10) == 0);  // beyond the stored degree
  }

  TEST_CASE("Delta table persistence") {
    auto dir = std::filesystem::temp_directory_path() / "hzhu-test-delta";
    std::filesystem::create_directories(dir);
    DeltaTable t = delta_coefficients(8);
    save_delta_table(t, dir / "t.txt");
    auto back = load_delta_table(dir / "t.txt");
    REQUIRE(back.has_value());
    CHECK(back->entries == t.entries);
    CHECK(back->max_degree == 8);
    {
      std::ofstream bad(dir / "bad.txt");
      bad << "1 2 1/3\n";  // no symmetric partner
    }
    CHECK_FALSE(load_delta_table(dir / "bad.txt").has_value());
    CHECK_FALSE(load_delta_table(dir / "missing.txt").has_value());
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("twisted zero mode of omega is ell/16 on the twisted vacuum") {
    for (int ell = 1; ell <= 3; ++ell) {
      FockVector w;
      for (int a = 1; a <= ell; ++a) w += omega(a);
      FockVector vac = FockVector::vacuum(Sector::Twisted);
      CHECK(twisted_zero_mode(w, vac) == ratio(ell, 16) * vac);
    }
  }

  TEST_CASE("twisted zero mode of h_a(-1)^2 on the first excited level") {
    // o(h(-1)^2) = 2 L(0), and h(-1/2)1 has L(0) = 1/2 + 1/16
    FockVector v(Sector::Twisted, parse_monomial("h1(-1/2)"));
    FockVector h2(Sector::Untwisted, parse_monomial("h1(-1)h1(-1)"));
    CHECK(twisted_zero_mode(h2, v) == ratio(9, 8) * v);
  }
}
