#include "hzhu/script.hpp"

#include <cctype>
#include <set>

namespace hzhu {

ScriptError::ScriptError(SourceLoc loc, const std::string& msg)
    : Error("line " + std::to_string(loc.line) + ", column " + std::to_string(loc.column) + ": " + msg),
      loc_(loc),
      msg_(msg) {}

std::string to_string(Expectation e) {
  switch (e) {
    case Expectation::Proved:
      return "proved";
    case Expectation::Disproved:
      return "disproved";
    case Expectation::Unknown:
      return "unknown";
  }
  return "?";
}

namespace {

template <class P>
bool deep_equal(const P& a, const P& b) {
  if (!a || !b) return !a && !b;
  return *a == *b;
}

}  // namespace

bool operator==(const Expr& a, const Expr& b) {
  return a.kind == b.kind && a.number == b.number && a.name == b.name && a.args == b.args &&
         a.monomial == b.monomial && a.n == b.n && a.explicit_n == b.explicit_n && deep_equal(a.lhs, b.lhs) &&
         deep_equal(a.rhs, b.rhs);
}

bool operator==(const ActionExpr& a, const ActionExpr& b) {
  return a.kind == b.kind && a.number == b.number && a.i == b.i && a.j == b.j && a.literal == b.literal &&
         a.power == b.power && deep_equal(a.lhs, b.lhs) && deep_equal(a.rhs, b.rhs);
}

bool operator==(const Statement& a, const Statement& b) {
  if (a.kind != b.kind || a.family != b.family || a.rank_claim != b.rank_claim || !(a.options == b.options))
    return false;
  if (a.exprs.size() != b.exprs.size()) return false;
  for (std::size_t i = 0; i < a.exprs.size(); ++i) {
    if (!deep_equal(a.exprs[i], b.exprs[i])) return false;
  }
  return deep_equal(a.expected, b.expected);
}

namespace {

struct Token {
  enum class Type { Ident, Int, Sym, End };
  Type type;
  std::string text;
  SourceLoc loc;
};

std::vector<Token> tokenize_line(std::string_view line, int lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    unsigned char c = static_cast<unsigned char>(line[i]);
    SourceLoc loc{lineno, static_cast<int>(i) + 1};
    if (c == '#') break;
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (std::isalpha(c) || c == '_') {
      std::size_t s = i;
      while (i < line.size() && (std::isalnum(static_cast<unsigned char>(line[i])) || line[i] == '_')) ++i;
      out.push_back({Token::Type::Ident, std::string(line.substr(s, i - s)), loc});
      continue;
    }
    if (std::isdigit(c)) {
      std::size_t s = i;
      while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
      out.push_back({Token::Type::Int, std::string(line.substr(s, i - s)), loc});
      continue;
    }
    if (std::string_view("()[],;+-*/^~=").find(static_cast<char>(c)) != std::string_view::npos) {
      out.push_back({Token::Type::Sym, std::string(1, static_cast<char>(c)), loc});
      ++i;
      continue;
    }
    throw ScriptError(loc, std::string("unexpected character '") + static_cast<char>(c) + "'");
  }
  out.push_back({Token::Type::End, "", SourceLoc{lineno, static_cast<int>(line.size()) + 1}});
  return out;
}

/// Splits "w12" into ("w", 12); returns nullopt unless the identifier is
/// exactly the prefix followed by digits.
std::optional<int> indexed(const std::string& ident, std::string_view prefix) {
  if (ident.size() <= prefix.size() || ident.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
  std::string rest = ident.substr(prefix.size());
  if (!std::all_of(rest.begin(), rest.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    return std::nullopt;
  if (rest.size() > 6) return std::nullopt;
  return std::stoi(rest);
}

class Parser {
public:
  Parser(std::vector<Token> toks) : t_(std::move(toks)) {}  // NOLINT

  const Token& peek(std::size_t k = 0) const { return t_[std::min(p_ + k, t_.size() - 1)]; }
  bool at_sym(std::string_view s, std::size_t k = 0) const {
    return peek(k).type == Token::Type::Sym && peek(k).text == s;
  }
  bool at_ident(std::string_view s) const { return peek().type == Token::Type::Ident && peek().text == s; }
  bool at_end() const { return peek().type == Token::Type::End; }
  Token next() { return t_[std::min(p_++, t_.size() - 1)]; }

  [[noreturn]] void fail(const std::string& msg) const {
    const Token& tk = peek();
    std::string got = tk.type == Token::Type::End ? "end of line" : "'" + tk.text + "'";
    throw ScriptError(tk.loc, msg + ", found " + got);
  }

  void expect_sym(std::string_view s) {
    if (!at_sym(s)) fail("expected '" + std::string(s) + "'");
    ++p_;
  }

  int expect_int() {
    if (peek().type != Token::Type::Int) fail("expected an integer");
    const std::string& s = next().text;
    if (s.size() > 9) throw ScriptError(t_[p_ - 1].loc, "integer too large");
    return std::stoi(s);
  }

  int expect_signed_int() {
    bool neg = false;
    if (at_sym("-")) {
      ++p_;
      neg = true;
    }
    int v = expect_int();
    return neg ? -v : v;
  }

  Rational expect_number() {
    if (peek().type != Token::Type::Int) fail("expected a number");
    Rational q(Integer(next().text));
    if (at_sym("/") && peek(1).type == Token::Type::Int) {
      ++p_;
      SourceLoc loc = peek().loc;
      Integer d(next().text);
      if (d == 0) throw ScriptError(loc, "zero denominator");
      q /= Rational(d);
      q.canonicalize();
    }
    return q;
  }

  // ---- element expressions ----

  static std::shared_ptr<Expr> node(Expr::Kind k, SourceLoc loc) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->loc = loc;
    return e;
  }

  ExprPtr sum() {
    ExprPtr x = prod();
    while (at_sym("+") || at_sym("-")) {
      Token op = next();
      auto e = node(op.text == "+" ? Expr::Kind::Add : Expr::Kind::Sub, op.loc);
      e->lhs = x;
      e->rhs = prod();
      x = e;
    }
    return x;
  }

  ExprPtr prod() {
    ExprPtr x = unary();
    while (at_sym("*")) {
      Token op = next();
      auto e = node(Expr::Kind::Star, op.loc);
      e->lhs = x;
      e->rhs = unary();
      x = e;
    }
    return x;
  }

  bool starts_primary() const {
    if (at_ident("with") || at_ident("on")) return false;
    return peek().type == Token::Type::Ident || at_sym("(");
  }

  ExprPtr unary() {
    if (at_sym("-")) {
      Token op = next();
      auto e = node(Expr::Kind::Neg, op.loc);
      e->lhs = unary();
      return e;
    }
    if (peek().type == Token::Type::Int) {
      SourceLoc loc = peek().loc;
      Rational q = expect_number();
      if (starts_primary()) {
        auto e = node(Expr::Kind::Scale, loc);
        e->number = q;
        e->lhs = postfix();
        return e;
      }
      auto e = node(Expr::Kind::Number, loc);
      e->number = q;
      return e;
    }
    return postfix();
  }

  ExprPtr postfix() {
    if (peek().type == Token::Type::Ident) {
      const std::string& id = peek().text;
      if ((id == "L" || indexed(id, "L")) && at_sym("(", 1)) {
        Token tk = next();
        int a = id == "L" ? 0 : *indexed(id, "L");
        expect_sym("(");
        int n = expect_signed_int();
        expect_sym(")");
        auto e = node(Expr::Kind::Vir, tk.loc);
        e->args = {a, n};
        e->lhs = postfix();
        return e;
      }
    }
    SourceLoc loc = peek().loc;
    bool raw = peek().type == Token::Type::Ident && indexed(peek().text, "h") && at_sym("(", 1);
    ExprPtr x = primary();
    if (!raw && at_sym("^")) {
      next();
      auto e = node(Expr::Kind::Power, loc);
      e->lhs = x;
      e->n = expect_int();
      return e;
    }
    return x;
  }

  std::vector<int> int_args(std::size_t count) {
    expect_sym("(");
    std::vector<int> v;
    for (std::size_t i = 0; i < count; ++i) {
      if (i) expect_sym(",");
      v.push_back(expect_int());
    }
    expect_sym(")");
    return v;
  }

  ExprPtr raw_monomial() {
    SourceLoc loc = peek().loc;
    std::vector<Mode> modes;
    while (peek().type == Token::Type::Ident && indexed(peek().text, "h") && at_sym("(", 1)) {
      Token tk = next();
      int gen = *indexed(tk.text, "h");
      expect_sym("(");
      if (!at_sym("-")) fail("expected a negative mode index");
      next();
      SourceLoc nloc = peek().loc;
      int num = expect_int();
      if (at_sym("/")) throw ScriptError(nloc, "twisted modes are not elements of the algebra");
      expect_sym(")");
      int power = 1;
      if (at_sym("^")) {
        next();
        power = expect_int();
      }
      if (gen < 1) throw ScriptError(tk.loc, "generator index must be positive");
      if (num < 1) throw ScriptError(nloc, "mode index must be negative");
      for (int k = 0; k < power; ++k) modes.push_back(Mode::integral(gen, -num));
    }
    auto e = node(Expr::Kind::Raw, loc);
    std::sort(modes.begin(), modes.end());
    e->monomial = Monomial(std::move(modes));
    return e;
  }

  ExprPtr primary() {
    const Token& tk = peek();
    if (at_sym("(")) {
      SourceLoc open = next().loc;
      if (at_end()) throw ScriptError(open, "unclosed parenthesis");
      ExprPtr x = sum();
      if (at_end()) throw ScriptError(open, "unclosed parenthesis");
      expect_sym(")");
      return x;
    }
    if (tk.type != Token::Type::Ident) fail("expected an element");
    const std::string id = tk.text;
    SourceLoc loc = tk.loc;
    if (indexed(id, "h") && at_sym("(", 1)) return raw_monomial();
    next();
    if (id == "circ" || id == "circn") {
      auto e = node(Expr::Kind::Circ, loc);
      e->explicit_n = id == "circn";
      expect_sym("(");
      e->lhs = sum();
      expect_sym(",");
      e->rhs = sum();
      if (e->explicit_n) {
        expect_sym(",");
        e->n = expect_int();
      }
      expect_sym(")");
      return e;
    }
    auto e = node(Expr::Kind::Named, loc);
    if (id == "one") {
      e->name = "one";
      return e;
    }
    for (const char* p : {"w", "J", "H"}) {
      if (auto a = indexed(id, p)) {
        e->name = p;
        e->args = {*a};
        return e;
      }
    }
    if (id == "S") {
      e->name = "S";
      expect_sym("(");
      int a = expect_int();
      expect_sym(",");
      int m = expect_int();
      expect_sym(";");
      int b = expect_int();
      expect_sym(",");
      int n = expect_int();
      expect_sym(")");
      e->args = {a, m, b, n};
      return e;
    }
    if (id == "Salpha") {
      e->name = "Salpha";
      expect_sym("(");
      e->args.push_back(expect_int());
      while (at_sym(",")) {
        next();
        e->args.push_back(expect_int());
      }
      expect_sym(")");
      return e;
    }
    for (const char* p : {"Eu", "Et", "Lam", "EuBar", "EtBar"}) {
      if (id == p) {
        e->name = p;
        e->args = int_args(2);
        return e;
      }
    }
    throw ScriptError(loc, "unknown element '" + id + "'");
  }

  // ---- expected actions ----

  static std::shared_ptr<ActionExpr> anode(ActionExpr::Kind k, SourceLoc loc) {
    auto e = std::make_shared<ActionExpr>();
    e->kind = k;
    e->loc = loc;
    return e;
  }

  ActionExprPtr asum() {
    ActionExprPtr x = aprod();
    while (at_sym("+") || at_sym("-")) {
      Token op = next();
      auto e = anode(op.text == "+" ? ActionExpr::Kind::Add : ActionExpr::Kind::Sub, op.loc);
      e->lhs = x;
      e->rhs = aprod();
      x = e;
    }
    return x;
  }

  ActionExprPtr aprod() {
    ActionExprPtr x = aunary();
    while (at_sym("*")) {
      Token op = next();
      auto e = anode(ActionExpr::Kind::Mul, op.loc);
      e->lhs = x;
      e->rhs = aunary();
      x = e;
    }
    return x;
  }

  ActionExprPtr aunary() {
    if (at_sym("-")) {
      Token op = next();
      auto e = anode(ActionExpr::Kind::Neg, op.loc);
      e->lhs = aunary();
      return e;
    }
    SourceLoc loc = peek().loc;
    ActionExprPtr x = aprimary();
    if (at_sym("^")) {
      next();
      auto e = anode(ActionExpr::Kind::Power, loc);
      e->lhs = x;
      e->power = expect_int();
      return e;
    }
    return x;
  }

  Rational signed_number() {
    bool neg = false;
    if (at_sym("-")) {
      next();
      neg = true;
    }
    Rational q = expect_number();
    return neg ? Rational(-q) : q;
  }

  ActionExprPtr aprimary() {
    const Token& tk = peek();
    SourceLoc loc = tk.loc;
    if (tk.type == Token::Type::Int) {
      auto e = anode(ActionExpr::Kind::Number, loc);
      e->number = expect_number();
      return e;
    }
    if (at_sym("(")) {
      SourceLoc open = next().loc;
      if (at_end()) throw ScriptError(open, "unclosed parenthesis");
      ActionExprPtr x = asum();
      if (at_end()) throw ScriptError(open, "unclosed parenthesis");
      expect_sym(")");
      return x;
    }
    if (at_sym("[")) {
      next();
      std::vector<std::vector<Rational>> rows;
      do {
        if (!rows.empty()) next();
        expect_sym("[");
        std::vector<Rational> row{signed_number()};
        while (at_sym(",")) {
          next();
          row.push_back(signed_number());
        }
        expect_sym("]");
        rows.push_back(std::move(row));
      } while (at_sym(","));
      expect_sym("]");
      RMatrix m(static_cast<int>(rows.size()));
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows.size()) throw ScriptError(loc, "matrix literal is not square");
        for (std::size_t c = 0; c < rows.size(); ++c) m.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
      }
      auto e = anode(ActionExpr::Kind::Literal, loc);
      e->literal = std::move(m);
      return e;
    }
    if (tk.type == Token::Type::Ident) {
      std::string id = tk.text;
      if (auto i = indexed(id, "l")) {
        next();
        auto e = anode(ActionExpr::Kind::Lambda, loc);
        e->i = *i;
        return e;
      }
      if (id == "I") {
        next();
        return anode(ActionExpr::Kind::Identity, loc);
      }
      if (id == "E" && at_sym("(", 1)) {
        next();
        auto v = int_args(2);
        auto e = anode(ActionExpr::Kind::Unit, loc);
        e->i = v[0];
        e->j = v[1];
        return e;
      }
    }
    fail("expected an action value");
  }

  // ---- statements ----

  StatementOptions options() {
    StatementOptions o;
    if (!at_ident("with")) return o;
    next();
    std::set<std::string> seen;
    do {
      if (!seen.empty()) next();
      if (peek().type != Token::Type::Ident) fail("expected an option name");
      Token key = next();
      if (!seen.insert(key.text).second) throw ScriptError(key.loc, "option '" + key.text + "' given twice");
      expect_sym("=");
      if (key.text == "expect") {
        if (peek().type != Token::Type::Ident) fail("expected proved, disproved or unknown");
        Token v = next();
        if (v.text == "proved")
          o.expect = Expectation::Proved;
        else if (v.text == "disproved")
          o.expect = Expectation::Disproved;
        else if (v.text == "unknown")
          o.expect = Expectation::Unknown;
        else
          throw ScriptError(v.loc, "expected proved, disproved or unknown");
      } else if (key.text == "max_weight") {
        o.max_weight = expect_int();
      } else if (key.text == "slack") {
        o.slack = expect_int();
      } else if (key.text == "rank") {
        SourceLoc l = peek().loc;
        o.rank = expect_int();
        if (*o.rank < 1 || *o.rank > 64) throw ScriptError(l, "rank must be between 1 and 64");
      } else {
        throw ScriptError(key.loc, "unknown option '" + key.text + "'");
      }
    } while (at_sym(","));
    return o;
  }

  Statement statement() {
    Statement s;
    const Token& head = peek();
    s.loc = head.loc;
    if (head.type != Token::Type::Ident) fail("expected a statement keyword");
    std::string kw = next().text;
    if (kw == "assert_equiv") {
      s.kind = Statement::Kind::AssertEquiv;
      s.exprs.push_back(sum());
      expect_sym("~");
      s.exprs.push_back(sum());
    } else if (kw == "assert_eval") {
      s.kind = Statement::Kind::AssertEval;
      s.exprs.push_back(sum());
      if (!at_ident("on")) fail("expected 'on'");
      next();
      if (peek().type != Token::Type::Ident) fail("expected a module family");
      Token fam = next();
      auto f = parse_family(fam.text);
      if (!f) throw ScriptError(fam.loc, "unknown module family '" + fam.text + "'");
      s.family = *f;
      expect_sym("=");
      s.expected = asum();
    } else if (kw == "assert_rank") {
      s.kind = Statement::Kind::AssertRank;
      expect_sym("[");
      s.exprs.push_back(sum());
      while (at_sym(",")) {
        next();
        s.exprs.push_back(sum());
      }
      expect_sym("]");
      expect_sym("=");
      s.rank_claim = expect_int();
    } else if (kw == "assert_zero_eval") {
      s.kind = Statement::Kind::AssertZeroEval;
      s.exprs.push_back(sum());
    } else {
      throw ScriptError(head.loc, "unknown statement '" + kw + "'");
    }
    s.options = options();
    if (!at_end()) fail("unexpected input");
    return s;
  }

private:
  std::vector<Token> t_;
  std::size_t p_ = 0;
};

void check_index(int i, int ell, SourceLoc loc) {
  if (i < 1 || i > ell)
    throw ScriptError(loc, "index " + std::to_string(i) + " out of range 1.." + std::to_string(ell));
}

void validate(const Expr& e, int ell) {
  switch (e.kind) {
    case Expr::Kind::Named: {
      if (e.name == "w" || e.name == "J" || e.name == "H") check_index(e.args[0], ell, e.loc);
      if (e.name == "S") {
        check_index(e.args[0], ell, e.loc);
        check_index(e.args[2], ell, e.loc);
        if (e.args[1] < 1 || e.args[3] < 1) throw ScriptError(e.loc, "S needs positive mode numbers");
      }
      if (e.name == "Salpha") {
        std::set<int> seen;
        for (int a : e.args) {
          check_index(a, ell, e.loc);
          if (!seen.insert(a).second) throw ScriptError(e.loc, "Salpha indices must be distinct");
        }
        if (e.args.size() % 2) throw ScriptError(e.loc, "Salpha needs an even number of indices");
      }
      if (e.name == "Eu" || e.name == "Et" || e.name == "Lam" || e.name == "EuBar" || e.name == "EtBar") {
        check_index(e.args[0], ell, e.loc);
        check_index(e.args[1], ell, e.loc);
        if (e.args[0] == e.args[1]) {
          std::string msg = e.name + " needs distinct indices";
          if (e.name == "Eu" || e.name == "Et") {
            const int a = e.args[0], b = a == 1 ? 2 : 1;
            auto unit = [&](int i, int j) { return e.name + "(" + std::to_string(i) + "," + std::to_string(j) + ")"; };
            msg += "; the diagonal unit is " + unit(a, b) + "*" + unit(b, a);
          }
          throw ScriptError(e.loc, msg);
        }
      }
      break;
    }
    case Expr::Kind::Raw:
      for (const auto& m : e.monomial.modes()) check_index(m.gen, ell, e.loc);
      if (e.monomial.parity() < 0) throw ScriptError(e.loc, "odd monomial is not in the fixed-point algebra");
      break;
    case Expr::Kind::Vir:
      if (e.args[0] != 0) check_index(e.args[0], ell, e.loc);
      break;
    default:
      break;
  }
  if (e.lhs) validate(*e.lhs, ell);
  if (e.rhs) validate(*e.rhs, ell);
}

void validate(const ActionExpr& e, int ell) {
  if (e.kind == ActionExpr::Kind::Lambda) check_index(e.i, ell, e.loc);
  if (e.kind == ActionExpr::Kind::Unit) {
    check_index(e.i, ell, e.loc);
    check_index(e.j, ell, e.loc);
  }
  if (e.kind == ActionExpr::Kind::Literal && e.literal.size() != ell)
    throw ScriptError(e.loc, "matrix literal must be " + std::to_string(ell) + "x" + std::to_string(ell));
  if (e.lhs) validate(*e.lhs, ell);
  if (e.rhs) validate(*e.rhs, ell);
}

void validate_kind(const ActionExpr& e, TopLevelAction::Kind k) {
  using K = ActionExpr::Kind;
  if (e.kind == K::Lambda && k != TopLevelAction::Kind::Poly)
    throw ScriptError(e.loc, "lambda variables only make sense on Mlambda");
  if ((e.kind == K::Unit || e.kind == K::Identity || e.kind == K::Literal) && k != TopLevelAction::Kind::Matrix)
    throw ScriptError(e.loc, "matrices only make sense on Hminus and Tminus");
  if (e.lhs) validate_kind(*e.lhs, k);
  if (e.rhs) validate_kind(*e.rhs, k);
}

}  // namespace

std::vector<Statement> parse_script(std::string_view text, Rank rank) {
  std::vector<Statement> out;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++lineno;
    pos = nl + 1;
    auto toks = tokenize_line(line, lineno);
    if (toks.size() == 1) continue;
    Parser p(std::move(toks));
    Statement s = p.statement();
    int ell = s.options.rank.value_or(rank.ell());
    for (const auto& e : s.exprs) validate(*e, ell);
    if (s.expected) {
      validate(*s.expected, ell);
      validate_kind(*s.expected, TopLevelAction::kind_of(s.family));
    }
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

int level(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      return 1;
    case Expr::Kind::Star:
      return 2;
    case Expr::Kind::Neg:
    case Expr::Kind::Scale:
    case Expr::Kind::Number:
      return 3;
    case Expr::Kind::Power:
    case Expr::Kind::Vir:
      return 4;
    default:
      return 5;
  }
}

std::string wrap(const Expr& e, int min_level) {
  std::string s = to_string(e);
  return level(e) < min_level ? "(" + s + ")" : s;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string raw_text(const Monomial& m) {
  std::string s;
  const auto& modes = m.modes();
  for (std::size_t i = 0; i < modes.size();) {
    std::size_t j = i;
    while (j < modes.size() && modes[j] == modes[i]) ++j;
    s += "h" + std::to_string(modes[i].gen) + "(" + std::to_string(modes[i].twice / 2) + ")";
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

}  // namespace

std::string to_string(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return to_string(e.number);
    case Expr::Kind::Named:
      if (e.name == "one") return "one";
      if (e.name == "w" || e.name == "J" || e.name == "H") return e.name + std::to_string(e.args[0]);
      if (e.name == "S")
        return "S(" + std::to_string(e.args[0]) + "," + std::to_string(e.args[1]) + ";" + std::to_string(e.args[2]) +
               "," + std::to_string(e.args[3]) + ")";
      return e.name + "(" + join_ints(e.args) + ")";
    case Expr::Kind::Raw:
      return raw_text(e.monomial);
    case Expr::Kind::Add:
      return wrap(*e.lhs, 1) + " + " + wrap(*e.rhs, 2);
    case Expr::Kind::Sub:
      return wrap(*e.lhs, 1) + " - " + wrap(*e.rhs, 2);
    case Expr::Kind::Star:
      return wrap(*e.lhs, 2) + " * " + wrap(*e.rhs, 3);
    case Expr::Kind::Neg:
      return "-" + wrap(*e.lhs, 3);
    case Expr::Kind::Scale: {
      std::string inner = e.lhs->kind == Expr::Kind::Number ? "(" + to_string(*e.lhs) + ")" : wrap(*e.lhs, 4);
      return to_string(e.number) + " " + inner;
    }
    case Expr::Kind::Power: {
      bool plain = level(*e.lhs) == 5 && e.lhs->kind != Expr::Kind::Raw;
      std::string base = plain ? to_string(*e.lhs) : "(" + to_string(*e.lhs) + ")";
      return base + "^" + std::to_string(e.n);
    }
    case Expr::Kind::Vir:
      return (e.args[0] ? "L" + std::to_string(e.args[0]) : std::string("L")) + "(" + std::to_string(e.args[1]) +
             ") " + wrap(*e.lhs, 4);
    case Expr::Kind::Circ:
      return std::string(e.explicit_n ? "circn(" : "circ(") + to_string(*e.lhs) + ", " + to_string(*e.rhs) +
             (e.explicit_n ? ", " + std::to_string(e.n) : "") + ")";
  }
  return "";
}

namespace {

int alevel(const ActionExpr& e) {
  switch (e.kind) {
    case ActionExpr::Kind::Add:
    case ActionExpr::Kind::Sub:
      return 1;
    case ActionExpr::Kind::Mul:
      return 2;
    case ActionExpr::Kind::Neg:
      return 3;
    case ActionExpr::Kind::Power:
      return 4;
    default:
      return 5;
  }
}

std::string awrap(const ActionExpr& e, int min_level) {
  std::string s = to_string(e);
  return alevel(e) < min_level ? "(" + s + ")" : s;
}

}  // namespace

std::string to_string(const ActionExpr& e) {
  switch (e.kind) {
    case ActionExpr::Kind::Number:
      return to_string(e.number);
    case ActionExpr::Kind::Lambda:
      return "l" + std::to_string(e.i);
    case ActionExpr::Kind::Unit:
      return "E(" + std::to_string(e.i) + "," + std::to_string(e.j) + ")";
    case ActionExpr::Kind::Identity:
      return "I";
    case ActionExpr::Kind::Literal:
      return e.literal.to_string();
    case ActionExpr::Kind::Add:
      return awrap(*e.lhs, 1) + " + " + awrap(*e.rhs, 2);
    case ActionExpr::Kind::Sub:
      return awrap(*e.lhs, 1) + " - " + awrap(*e.rhs, 2);
    case ActionExpr::Kind::Mul:
      return awrap(*e.lhs, 2) + "*" + awrap(*e.rhs, 3);
    case ActionExpr::Kind::Neg:
      return "-" + awrap(*e.lhs, 3);
    case ActionExpr::Kind::Power:
      // a number base would merge with the exponent's slash parsing
      return (alevel(*e.lhs) == 5 && e.lhs->kind != ActionExpr::Kind::Number ? to_string(*e.lhs)
                                                                            : "(" + to_string(*e.lhs) + ")") +
             "^" + std::to_string(e.power);
  }
  return "";
}

std::string to_string(const Statement& s) {
  std::string out;
  switch (s.kind) {
    case Statement::Kind::AssertEquiv:
      out = "assert_equiv " + to_string(*s.exprs[0]) + " ~ " + to_string(*s.exprs[1]);
      break;
    case Statement::Kind::AssertEval:
      out = "assert_eval " + to_string(*s.exprs[0]) + " on " + to_string(s.family) + " = " + to_string(*s.expected);
      break;
    case Statement::Kind::AssertRank: {
      out = "assert_rank [";
      for (std::size_t i = 0; i < s.exprs.size(); ++i) out += (i ? ", " : "") + to_string(*s.exprs[i]);
      out += "] = " + std::to_string(s.rank_claim);
      break;
    }
    case Statement::Kind::AssertZeroEval:
      out = "assert_zero_eval " + to_string(*s.exprs[0]);
      break;
  }
  std::vector<std::string> opts;
  if (s.options.max_weight) opts.push_back("max_weight=" + std::to_string(*s.options.max_weight));
  if (s.options.slack) opts.push_back("slack=" + std::to_string(*s.options.slack));
  if (s.options.rank) opts.push_back("rank=" + std::to_string(*s.options.rank));
  if (s.options.expect != Expectation::Proved) opts.push_back("expect=" + to_string(s.options.expect));
  for (std::size_t i = 0; i < opts.size(); ++i) out += (i ? ", " : " with ") + opts[i];
  return out;
}

std::string to_string(const std::vector<Statement>& script) {
  std::string out;
  for (const auto& s : script) out += to_string(s) + "\n";
  return out;
}

TopLevelAction evaluate_action_expr(const ActionExpr& e, ModuleFamily f, Rank rank) {
  using K = ActionExpr::Kind;
  switch (e.kind) {
    case K::Number: {
      TopLevelAction one = TopLevelAction::one(f, rank);
      one *= e.number;
      return one;
    }
    case K::Lambda:
      if (TopLevelAction::kind_of(f) != TopLevelAction::Kind::Poly) throw Error("lambda variable outside Mlambda");
      return LambdaPoly::variable(e.i);
    case K::Unit:
      if (TopLevelAction::kind_of(f) != TopLevelAction::Kind::Matrix) throw Error("matrix unit on a scalar family");
      return RMatrix::unit(rank.ell(), e.i, e.j);
    case K::Identity:
      if (TopLevelAction::kind_of(f) != TopLevelAction::Kind::Matrix) throw Error("identity on a scalar family");
      return RMatrix::identity(rank.ell());
    case K::Literal:
      if (e.literal.size() != rank.ell()) throw Error("matrix literal has the wrong size");
      return e.literal;
    case K::Add:
      return evaluate_action_expr(*e.lhs, f, rank) + evaluate_action_expr(*e.rhs, f, rank);
    case K::Sub:
      return evaluate_action_expr(*e.lhs, f, rank) - evaluate_action_expr(*e.rhs, f, rank);
    case K::Mul:
      return evaluate_action_expr(*e.lhs, f, rank) * evaluate_action_expr(*e.rhs, f, rank);
    case K::Neg: {
      TopLevelAction x = evaluate_action_expr(*e.lhs, f, rank);
      x *= Rational(-1);
      return x;
    }
    case K::Power: {
      TopLevelAction base = evaluate_action_expr(*e.lhs, f, rank);
      TopLevelAction acc = TopLevelAction::one(f, rank);
      for (int k = 0; k < e.power; ++k) acc = acc * base;
      return acc;
    }
  }
  throw Error("bad action expression");
}

int max_index(const Expr& e) {
  int m = 0;
  if (e.kind == Expr::Kind::Named) {
    if (e.name == "S") {
      m = std::max(e.args[0], e.args[2]);
    } else {
      for (int a : e.args) m = std::max(m, a);
    }
  }
  if (e.kind == Expr::Kind::Raw) {
    for (const auto& md : e.monomial.modes()) m = std::max(m, md.gen);
  }
  if (e.kind == Expr::Kind::Vir) m = e.args[0];
  if (e.lhs) m = std::max(m, max_index(*e.lhs));
  if (e.rhs) m = std::max(m, max_index(*e.rhs));
  return m;
}

}  // namespace hzhu
