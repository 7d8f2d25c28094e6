#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hzhu/eval.hpp"
#include "hzhu/fock.hpp"

namespace hzhu {

struct SourceLoc {
  int line = 1;
  int column = 1;
};

/// Parse or validation failure with a source position.
class ScriptError : public Error {
public:
  ScriptError(SourceLoc loc, const std::string& msg);
  SourceLoc loc() const { return loc_; }
  const std::string& bare_message() const { return msg_; }

private:
  SourceLoc loc_;
  std::string msg_;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Element expressions.
///   Number   rational literal (a multiple of the vacuum)
///   Named    w1, J1, H1, one, S(a,m;b,n), Salpha(a,b,...), Eu/Et/Lam/EuBar/EtBar(a,b)
///   Raw      h1(-3)h2(-1)^2
///   Add/Sub, Neg, Scale ("3/2 x"), Star ("x * y"), Circ, Power ("x^k"), Vir ("L1(-2) x", "L(-1) x")
struct Expr {
  enum class Kind { Number, Named, Raw, Add, Sub, Neg, Scale, Star, Circ, Power, Vir };
  Kind kind;
  SourceLoc loc;
  Rational number;        // Number, Scale
  std::string name;       // Named
  std::vector<int> args;  // Named indices; Vir: {a, n} with a = 0 for the total L
  Monomial monomial;      // Raw
  ExprPtr lhs, rhs;       // binary nodes; unary nodes use lhs
  int n = 0;              // Circ index, Power exponent
  bool explicit_n = false;  // Circ written as circn

  friend bool operator==(const Expr& a, const Expr& b);
};

/// Expected top-level actions: rationals, l1..l_ell, E(i,j), I, matrix
/// literals, combined with + - * and ^ (nonnegative integer powers).
struct ActionExpr;
using ActionExprPtr = std::shared_ptr<const ActionExpr>;
struct ActionExpr {
  enum class Kind { Number, Lambda, Unit, Identity, Literal, Add, Sub, Neg, Mul, Power };
  Kind kind;
  SourceLoc loc;
  Rational number;
  int i = 0, j = 0;  // Lambda index in i; Unit (i, j)
  RMatrix literal;
  ActionExprPtr lhs, rhs;
  int power = 0;

  friend bool operator==(const ActionExpr& a, const ActionExpr& b);
};

enum class Expectation { Proved, Disproved, Unknown };
std::string to_string(Expectation e);

struct StatementOptions {
  std::optional<int> max_weight;
  std::optional<int> slack;
  std::optional<int> rank;
  Expectation expect = Expectation::Proved;
  friend bool operator==(const StatementOptions&, const StatementOptions&) = default;
};

struct Statement {
  enum class Kind { AssertEquiv, AssertEval, AssertRank, AssertZeroEval };
  Kind kind;
  SourceLoc loc;
  std::vector<ExprPtr> exprs;  // Equiv: lhs, rhs; Eval/ZeroEval: one; Rank: the list
  ModuleFamily family = ModuleFamily::Hplus;
  ActionExprPtr expected;
  int rank_claim = 0;
  StatementOptions options;

  friend bool operator==(const Statement& a, const Statement& b);
};

/// Parses a script; indices are checked against `rank` (or a statement's
/// own `rank=` option).
std::vector<Statement> parse_script(std::string_view text, Rank rank);

std::string to_string(const Expr& e);
std::string to_string(const ActionExpr& e);
std::string to_string(const Statement& s);
/// One statement per line.
std::string to_string(const std::vector<Statement>& script);

/// Value of an expected-action expression on a family of the given rank.
TopLevelAction evaluate_action_expr(const ActionExpr& e, ModuleFamily f, Rank rank);

/// Largest generator index used by the expression.
int max_index(const Expr& e);

}  // namespace hzhu
