#include <doctest.h>

#include <algorithm>
#include <json.hpp>

#include "hzhu/runner.hpp"

using namespace hzhu;

namespace {

Report run(const std::string& text, int ell = 2) {
  RunConfig cfg;
  cfg.rank = Rank(ell);
  return run_script(parse_script(text, cfg.rank), cfg);
}

}  // namespace

TEST_SUITE("runner") {
  TEST_CASE("false equivalence is disproved with a witness") {
    Report r = run("assert_equiv w1 ~ 0");
    REQUIRE(r.results.size() == 1);
    CHECK(r.results[0].status == Status::Disproved);
    REQUIRE(r.results[0].witness.has_value());
    CHECK(r.results[0].witness->family == ModuleFamily::Hminus);
    CHECK_FALSE(r.passed());
  }

  TEST_CASE("expected disproof passes") {
    Report r = run("assert_equiv w1 ~ 0 with expect=disproved");
    CHECK(r.results[0].status == Status::Disproved);
    CHECK(r.passed());
  }

  TEST_CASE("right product identity is certified") {
    Report r = run("assert_equiv h1(-1)h2(-1) * w1 ~ L1(-2) h1(-1)h2(-1) + L1(-1) h1(-1)h2(-1) with max_weight=4");
    CHECK(r.results[0].status == Status::Proved);
    CHECK(r.echelons_built == 1);
  }

  TEST_CASE("rank of S_12(1,m)") {
    Report r = run("assert_rank [S(1,1;2,1), S(1,1;2,2), S(1,1;2,3), S(1,1;2,4), S(1,1;2,5)] = 5");
    CHECK(r.results[0].status == Status::Proved);
    Report low = run("assert_rank [S(1,1;2,1), S(1,1;2,2)] = 1");
    CHECK(low.results[0].status == Status::Disproved);
  }

  TEST_CASE("cutoff too small leaves the statement unknown") {
    Report r = run("assert_equiv S(1,1;2,6) ~ -3/16 S(1,1;2,2) - 11/8 S(1,1;2,3) - 51/16 S(1,1;2,4) - 3 S(1,1;2,5) "
                   "with max_weight=6, slack=0");
    CHECK(r.results[0].status == Status::Unknown);
    CHECK_FALSE(r.passed());
  }

  TEST_CASE("weight cap is reported, not fatal") {
    Report r = run("assert_equiv w1 ~ w1 with max_weight=40\nassert_zero_eval w1 - w1");
    CHECK(r.results[0].status == Status::Error);
    CHECK(r.results[1].status == Status::Proved);
  }

  TEST_CASE("reports are deterministic apart from timing") {
    const std::string text = "assert_eval S(1,1;2,4) on Tminus = -35/32*E(1,2) - 5/32*E(2,1)\n"
                             "assert_equiv w1 * Eu(1,2) ~ Eu(1,2) with max_weight=8\n"
                             "assert_equiv w2 ~ 0\n";
    std::string a = report_json(run(text), false), b = report_json(run(text), false);
    CHECK(a == b);
    CHECK(report_text(run(text), false) == report_text(run(text), false));
    auto j = nlohmann::json::parse(a);
    CHECK(j["passed"] == false);
    CHECK(j["statements"].size() == 3);
    CHECK(j["statements"][2]["status"] == "Disproved");
    CHECK_FALSE(j.contains("seconds"));
    CHECK(nlohmann::json::parse(report_json(run(text), true)).contains("seconds"));
  }

  TEST_CASE("suites") {
    CHECK_THROWS_AS(builtin_suite("nope", Rank(2)), Error);
    RunConfig cfg;
    cfg.rank = Rank(3);
    Report t = run_suite(builtin_suite("tables", cfg.rank), cfg);
    CHECK(t.passed());
    CHECK(t.results.size() == 40);
    cfg.rank = Rank(1);
    CHECK(run_suite(builtin_suite("tables", cfg.rank), cfg).results.size() == 10);
  }

  TEST_CASE("y6 reduction coefficients") {
    auto c = circle_reduction_coefficients();
    REQUIRE(c.size() == 6);
    CHECK(c == std::vector<Rational>{0, -12, -88, -204, -192, -64});
  }

  TEST_CASE("tables: csv and json") {
    std::string csv = emit_tables(Rank(2), "csv");
    CHECK(csv.rfind("table,element,family,value\n", 0) == 0);
    CHECK(csv.find("1,\"S(1,1;2,4)\",Tminus,\"[[0,-35/32],[-5/32,0]]\"") != std::string::npos);
    CHECK(emit_tables(Rank(2), "csv") == csv);
    for (int ell = 1; ell <= 3; ++ell) {
      for (const char* f : {"csv", "json"}) {
        auto rows = compute_tables(Rank(ell));
        CHECK(parse_tables(emit_tables(rows, f), f) == rows);
      }
    }
    auto j = nlohmann::json::parse(emit_tables(Rank(1), "json"));
    CHECK(j.size() == 10);
    for (const auto& row : j)
      if (row["family"] == "Hminus") CHECK(row["value"].size() == 1);
    CHECK_THROWS_AS(emit_tables(Rank(2), "xml"), Error);
  }

  TEST_CASE("delta table text") {
    std::string t = emit_delta_table(4);
    CHECK(t.find("1 1 1/16\n") != std::string::npos);
    CHECK(t.find("1 3 ") != std::string::npos);
    CHECK(std::count(t.begin(), t.end(), '\n') == 6);  // m, n >= 1, m + n <= 4
  }
}
