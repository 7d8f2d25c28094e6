#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hzhu/runner.hpp"
#include "hzhu/script.hpp"

using namespace hzhu;

namespace {

Statement one(const std::string& text, int ell = 3) {
  auto s = parse_script(text, Rank(ell));
  REQUIRE(s.size() == 1);
  return s[0];
}

SourceLoc error_at(const std::string& text, int ell = 3) {
  try {
    parse_script(text, Rank(ell));
  } catch (const ScriptError& e) {
    return e.loc();
  }
  FAIL("no error for: " << text);
  return {};
}

void check_round_trip(const std::string& text, Rank rank) {
  auto a = parse_script(text, rank);
  auto b = parse_script(to_string(a), rank);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    INFO(to_string(a[i]));
    CHECK(a[i] == b[i]);
  }
}

}  // namespace

TEST_SUITE("script") {
  TEST_CASE("star of a named element") {
    Statement s = one("assert_equiv w1 * Eu(2,3) ~ 0");
    CHECK(s.kind == Statement::Kind::AssertEquiv);
    const Expr& lhs = *s.exprs[0];
    CHECK(lhs.kind == Expr::Kind::Star);
    CHECK(lhs.lhs->kind == Expr::Kind::Named);
    CHECK(lhs.lhs->name == "w");
    CHECK(lhs.rhs->name == "Eu");
    CHECK(lhs.rhs->args == std::vector<int>{2, 3});
    CHECK(s.exprs[1]->kind == Expr::Kind::Number);
    CHECK(s.exprs[1]->number == 0);
  }

  TEST_CASE("evaluation statement") {
    Statement s = one("assert_eval Lam(1,2) on Mlambda = l1*l2");
    CHECK(s.kind == Statement::Kind::AssertEval);
    CHECK(s.family == ModuleFamily::Mlambda);
    CHECK(evaluate_action_expr(*s.expected, ModuleFamily::Mlambda, Rank(3)) ==
          TopLevelAction(LambdaPoly::variable(1) * LambdaPoly::variable(2)));
  }

  TEST_CASE("precedence: scalar, then star, then sums; star is left associative") {
    Statement s = one("assert_equiv 2 w1 * w2 + w3 ~ w1 * w2 * w3");
    const Expr& lhs = *s.exprs[0];
    CHECK(lhs.kind == Expr::Kind::Add);
    CHECK(lhs.lhs->kind == Expr::Kind::Star);
    CHECK(lhs.lhs->lhs->kind == Expr::Kind::Scale);
    const Expr& rhs = *s.exprs[1];
    CHECK(rhs.kind == Expr::Kind::Star);
    CHECK(rhs.lhs->kind == Expr::Kind::Star);
  }

  TEST_CASE("syntax errors carry positions") {
    SourceLoc a = error_at("assert_equiv w1 * (");
    CHECK(a.line == 1);
    CHECK(a.column == 19);
    SourceLoc b = error_at("# comment\n\nassert_eval w1 on Hminus = E(1,1)\nassert_equiv w1 ~ ~ 0");
    CHECK(b.line == 4);
    CHECK(b.column == 19);
    CHECK(error_at("assert_frobnicate w1").column == 1);
  }

  TEST_CASE("index and diagonal checks") {
    SourceLoc r = error_at("assert_zero_eval Eu(1,4)");
    CHECK(r.column == 18);
    SourceLoc d = error_at("assert_zero_eval w1 + Lam(2,2)");
    CHECK(d.column == 23);
    try {
      parse_script("assert_zero_eval Et(1,1)", Rank(2));
      FAIL("diagonal accepted");
    } catch (const ScriptError& e) {
      CHECK(std::string(e.what()).find("Et(1,2)*Et(2,1)") != std::string::npos);
    }
    error_at("assert_zero_eval h1(-1)");             // odd
    error_at("assert_eval w1 on Hplus = l1");        // lambda off Mlambda
    error_at("assert_eval w1 on Mlambda = E(1,1)");  // matrix off the matrix families
    error_at("assert_zero_eval w4");
    // a statement's own rank widens the index range
    CHECK_NOTHROW(parse_script("assert_zero_eval w4 with rank=4", Rank(2)));
  }

  TEST_CASE("options") {
    Statement s = one("assert_equiv w1 ~ 0 with max_weight=8, slack=1, expect=disproved");
    CHECK(s.options.max_weight == 8);
    CHECK(s.options.slack == 1);
    CHECK(s.options.expect == Expectation::Disproved);
    CHECK_FALSE(s.options.rank.has_value());
    error_at("assert_equiv w1 ~ 0 with colour=blue");
  }

  TEST_CASE("raw monomials, Virasoro operators, circles and matrices") {
    Statement s = one("assert_equiv L1(-2) h1(-3)h2(-1)^2h1(-1) ~ circn(w1, S(1,1;2,3), 2) - circ(w2, one)");
    CHECK(s.exprs[0]->kind == Expr::Kind::Vir);
    CHECK(s.exprs[0]->lhs->kind == Expr::Kind::Raw);
    CHECK(to_string(s.exprs[0]->lhs->monomial) == "h1(-3)h1(-1)h2(-1)h2(-1)");
    Statement m = one("assert_eval H1 on Tminus = [[1/2,0,0],[0,0,0],[0,0,1]] - 3*E(1,1) + I^2");
    auto v = evaluate_action_expr(*m.expected, ModuleFamily::Tminus, Rank(3));
    CHECK(v.matrix().at(0, 0) == ratio(-3, 2));
    CHECK(v.matrix().at(2, 2) == 2);
  }

  TEST_CASE("round trip over every built-in suite and shipped script") {
    for (int ell = 1; ell <= 3; ++ell) {
      for (const auto& name : suite_names()) {
        if (name == "all") continue;
        check_round_trip(builtin_suite(name, Rank(ell)).script, Rank(ell));
      }
    }
    for (const auto& entry : std::filesystem::directory_iterator(HZHU_SCRIPTS_DIR)) {
      if (entry.path().extension() != ".hzs" || entry.path().stem() == "syntax_error") continue;
      std::ifstream in(entry.path());
      std::stringstream text;
      text << in.rdbuf();
      INFO(entry.path().string());
      check_round_trip(text.str(), Rank(3));
    }
  }
}
