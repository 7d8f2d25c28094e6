#include "hzhu/runner.hpp"

#include <chrono>
#include <iomanip>
#include <map>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "hzhu/vertex.hpp"
#include "hzhu/zhu.hpp"

namespace hzhu {

std::string to_string(Status s) {
  switch (s) {
    case Status::Proved:
      return "Proved";
    case Status::Disproved:
      return "Disproved";
    case Status::Unknown:
      return "Unknown";
    case Status::Error:
      return "Error";
  }
  return "?";
}

bool StatementResult::passed() const {
  switch (expect) {
    case Expectation::Proved:
      return status == Status::Proved;
    case Expectation::Disproved:
      return status == Status::Disproved;
    case Expectation::Unknown:
      return status == Status::Unknown;
  }
  return false;
}

bool Report::passed() const {
  return std::all_of(results.begin(), results.end(), [](const StatementResult& r) { return r.passed(); });
}

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [&](const StatementResult& r) { return r.status == s; }));
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

using Actions = std::array<TopLevelAction, 5>;

class Context {
public:
  explicit Context(Rank rank) : rank_(rank) {}

  Rank rank() const { return rank_; }

  /// Upper bound on the mode-weight of the realization.
  int weight_bound(const Expr& e) const {
    switch (e.kind) {
      case Expr::Kind::Number:
        return 0;
      case Expr::Kind::Named:
        if (e.name == "one") return 0;
        if (e.name == "w") return 2;
        if (e.name == "J" || e.name == "H") return 4;
        if (e.name == "S") return e.args[1] + e.args[3];
        if (e.name == "Salpha") return static_cast<int>(e.args.size());
        return 6;
      case Expr::Kind::Raw:
        return e.monomial.weight2() / 2;
      case Expr::Kind::Add:
      case Expr::Kind::Sub:
        return std::max(weight_bound(*e.lhs), weight_bound(*e.rhs));
      case Expr::Kind::Neg:
      case Expr::Kind::Scale:
        return weight_bound(*e.lhs);
      case Expr::Kind::Star:
        return weight_bound(*e.lhs) + weight_bound(*e.rhs);
      case Expr::Kind::Circ:
        return weight_bound(*e.lhs) + weight_bound(*e.rhs) + e.n + 1;
      case Expr::Kind::Power:
        return e.n * weight_bound(*e.lhs);
      case Expr::Kind::Vir:
        return std::max(0, weight_bound(*e.lhs) - e.args[1]);
    }
    return 0;
  }

  const FockVector& realize(const Expr& e) {
    std::string key = to_string(e);
    auto it = real_.find(key);
    if (it != real_.end()) return it->second;
    FockVector v = compute(e);
    return real_.emplace(key, std::move(v)).first->second;
  }

  /// Actions on the five families, computed homomorphically: products of
  /// factors for *, zero for circle elements.
  const Actions& actions(const Expr& e) {
    std::string key = to_string(e);
    auto it = act_.find(key);
    if (it != act_.end()) return it->second;
    Actions a = compute_actions(e);
    return act_.emplace(key, std::move(a)).first->second;
  }

private:
  FockVector compute(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::Number: {
        FockVector v = FockVector::vacuum();
        v *= e.number;
        return v;
      }
      case Expr::Kind::Named:
        return named(e);
      case Expr::Kind::Raw:
        return FockVector(Sector::Untwisted, e.monomial);
      case Expr::Kind::Add:
        return realize(*e.lhs) + realize(*e.rhs);
      case Expr::Kind::Sub:
        return realize(*e.lhs) - realize(*e.rhs);
      case Expr::Kind::Neg:
        return -realize(*e.lhs);
      case Expr::Kind::Scale: {
        FockVector v = realize(*e.lhs);
        v *= e.number;
        return v;
      }
      case Expr::Kind::Star:
        return star(realize(*e.lhs), realize(*e.rhs));
      case Expr::Kind::Circ:
        return circ_n(realize(*e.lhs), realize(*e.rhs), e.n);
      case Expr::Kind::Power:
        return star_power(realize(*e.lhs), e.n);
      case Expr::Kind::Vir: {
        const FockVector& v = realize(*e.lhs);
        if (e.args[0] == 0) return virasoro_total(rank_, e.args[1], v);
        return virasoro<Rational>(e.args[0], e.args[1], v);
      }
    }
    throw Error("bad expression");
  }

  FockVector named(const Expr& e) const {
    const auto& a = e.args;
    if (e.name == "one") return FockVector::vacuum();
    if (e.name == "w") return named_omega(rank_, a[0]);
    if (e.name == "J") return named_J(rank_, a[0]);
    if (e.name == "H") return named_H(rank_, a[0]);
    if (e.name == "S") return named_S(rank_, a[0], a[1], a[2], a[3]);
    if (e.name == "Salpha") return named_S_alpha(rank_, a);
    if (e.name == "Eu") return named_Eu(rank_, a[0], a[1]);
    if (e.name == "Et") return named_Et(rank_, a[0], a[1]);
    if (e.name == "Lam") return named_Lam(rank_, a[0], a[1]);
    if (e.name == "EuBar") return named_EuBar(rank_, a[0], a[1]);
    if (e.name == "EtBar") return named_EtBar(rank_, a[0], a[1]);
    throw Error("unknown element " + e.name);
  }

  Actions compute_actions(const Expr& e) {
    Actions out;
    auto each = [&](auto&& fn) {
      for (std::size_t i = 0; i < 5; ++i) out[i] = fn(i, all_families()[i]);
    };
    switch (e.kind) {
      case Expr::Kind::Number:
        each([&](std::size_t, ModuleFamily f) {
          TopLevelAction x = TopLevelAction::one(f, rank_);
          x *= e.number;
          return x;
        });
        return out;
      case Expr::Kind::Add: {
        const Actions& l = actions(*e.lhs);
        const Actions& r = actions(*e.rhs);
        each([&](std::size_t i, ModuleFamily) { return l[i] + r[i]; });
        return out;
      }
      case Expr::Kind::Sub: {
        const Actions& l = actions(*e.lhs);
        const Actions& r = actions(*e.rhs);
        each([&](std::size_t i, ModuleFamily) { return l[i] - r[i]; });
        return out;
      }
      case Expr::Kind::Neg:
      case Expr::Kind::Scale: {
        Rational c = e.kind == Expr::Kind::Neg ? Rational(-1) : e.number;
        const Actions& l = actions(*e.lhs);
        each([&](std::size_t i, ModuleFamily) {
          TopLevelAction x = l[i];
          x *= c;
          return x;
        });
        return out;
      }
      case Expr::Kind::Star: {
        const Actions& l = actions(*e.lhs);
        const Actions& r = actions(*e.rhs);
        each([&](std::size_t i, ModuleFamily) { return l[i] * r[i]; });
        return out;
      }
      case Expr::Kind::Circ:
        each([&](std::size_t, ModuleFamily f) { return TopLevelAction::zero(f, rank_); });
        return out;
      case Expr::Kind::Power: {
        const Actions& l = actions(*e.lhs);
        each([&](std::size_t i, ModuleFamily f) {
          TopLevelAction x = TopLevelAction::one(f, rank_);
          for (int k = 0; k < e.n; ++k) x = x * l[i];
          return x;
        });
        return out;
      }
      default:
        return evaluate_all(realize(e), rank_);
    }
  }

  Rank rank_;
  std::map<std::string, FockVector> real_;
  std::map<std::string, Actions> act_;
};

class Runner {
public:
  explicit Runner(const RunConfig& c) : config_(c) {}

  Context& context(int ell) {
    auto it = contexts_.find(ell);
    if (it == contexts_.end()) it = contexts_.emplace(ell, std::make_unique<Context>(Rank(ell))).first;
    return *it->second;
  }

  const OSpanEchelon& echelon(int ell, int w, int s) {
    auto key = std::make_tuple(ell, w, s);
    auto it = echelons_.find(key);
    if (it != echelons_.end()) {
      ++reuse_;
      return *it->second;
    }
    ++built_;
    return *echelons_.emplace(key, std::make_unique<OSpanEchelon>(Rank(ell), w, s)).first->second;
  }

  std::size_t built() const { return built_; }
  std::size_t cache_hits() const {
    std::size_t n = reuse_;
    for (const auto& [k, e] : echelons_) n += e->cache_hits();
    return n;
  }

  StatementResult run(const Statement& s) {
    StatementResult r;
    r.line = s.loc.line;
    r.text = to_string(s);
    r.expect = s.options.expect;
    r.rank = s.options.rank.value_or(config_.rank.ell());
    r.max_weight = config_.override_cutoffs ? config_.max_weight : s.options.max_weight.value_or(config_.max_weight);
    r.slack = config_.override_cutoffs ? config_.slack : s.options.slack.value_or(config_.slack);
    auto t0 = Clock::now();
    try {
      if (r.max_weight > config_.weight_cap) {
        r.status = Status::Error;
        r.detail = "max_weight " + std::to_string(r.max_weight) + " exceeds the cap " +
                   std::to_string(config_.weight_cap);
      } else if (r.slack < 0 || r.max_weight < 2) {
        r.status = Status::Error;
        r.detail = "cutoffs must satisfy max_weight >= 2 and slack >= 0";
      } else {
        Context& ctx = context(r.rank);
        switch (s.kind) {
          case Statement::Kind::AssertEquiv:
            r.kind = "assert_equiv";
            equiv(ctx, s, r);
            break;
          case Statement::Kind::AssertEval:
            r.kind = "assert_eval";
            eval(ctx, s, r);
            break;
          case Statement::Kind::AssertRank:
            r.kind = "assert_rank";
            rank(ctx, s, r);
            break;
          case Statement::Kind::AssertZeroEval:
            r.kind = "assert_zero_eval";
            zero_eval(ctx, s, r);
            break;
        }
      }
    } catch (const std::exception& ex) {
      r.status = Status::Error;
      r.witness.reset();
      r.detail = ex.what();
    }
    if (r.kind.empty()) r.kind = kind_name(s.kind);
    r.seconds = since(t0);
    return r;
  }

private:
  static std::string kind_name(Statement::Kind k) {
    switch (k) {
      case Statement::Kind::AssertEquiv:
        return "assert_equiv";
      case Statement::Kind::AssertEval:
        return "assert_eval";
      case Statement::Kind::AssertRank:
        return "assert_rank";
      case Statement::Kind::AssertZeroEval:
        return "assert_zero_eval";
    }
    return "";
  }

  void equiv(Context& ctx, const Statement& s, StatementResult& r) {
    const Expr& x = *s.exprs[0];
    const Expr& y = *s.exprs[1];
    if (auto w = compare_actions(ctx.actions(x), ctx.actions(y))) {
      r.status = Status::Disproved;
      r.witness = w;
      r.detail = "top-level actions differ";
      return;
    }
    int bound = std::max(ctx.weight_bound(x), ctx.weight_bound(y));
    if (bound > r.max_weight + r.slack) {
      r.status = Status::Unknown;
      r.detail = "no disproof; weight bound " + std::to_string(bound) + " exceeds max_weight + slack";
      return;
    }
    FockVector d = ctx.realize(x) - ctx.realize(y);
    if (d.is_zero()) {
      r.status = Status::Proved;
      r.detail = "identical vectors";
      return;
    }
    int top = max_weight(d).twice / 2;
    if (top > r.max_weight) {
      r.status = Status::Unknown;
      r.detail = "no disproof; difference has weight " + std::to_string(top) + " above max_weight";
      return;
    }
    FockVector nf = echelon(r.rank, r.max_weight, r.slack).reduce(d);
    if (nf.is_zero()) {
      r.status = Status::Proved;
      r.detail = "difference lies in the circle span";
    } else {
      r.status = Status::Unknown;
      r.detail = "no disproof; normal form has " + std::to_string(nf.size()) + " terms";
    }
  }

  void eval(Context& ctx, const Statement& s, StatementResult& r) {
    std::size_t i = 0;
    while (all_families()[i] != s.family) ++i;
    const TopLevelAction& got = ctx.actions(*s.exprs[0])[i];
    TopLevelAction want = evaluate_action_expr(*s.expected, s.family, ctx.rank());
    if (auto w = compare_action(s.family, got, want)) {
      r.status = Status::Disproved;
      r.witness = w;
      r.detail = "computed " + got.to_string();
    } else {
      r.status = Status::Proved;
      r.detail = got.to_string();
    }
  }

  void zero_eval(Context& ctx, const Statement& s, StatementResult& r) {
    Actions zero;
    for (std::size_t i = 0; i < 5; ++i) zero[i] = TopLevelAction::zero(all_families()[i], ctx.rank());
    if (auto w = compare_actions(ctx.actions(*s.exprs[0]), zero)) {
      r.status = Status::Disproved;
      r.witness = w;
    } else {
      r.status = Status::Proved;
      r.detail = "zero on all five top levels";
    }
  }

  void rank(Context& ctx, const Statement& s, StatementResult& r) {
    std::vector<Actions> evs;
    for (const auto& e : s.exprs) evs.push_back(ctx.actions(*e));
    std::size_t lower = independence_rank(evs);
    std::size_t claim = static_cast<std::size_t>(s.rank_claim);
    r.detail = "evaluation rank " + std::to_string(lower);
    if (lower > claim) {
      r.status = Status::Disproved;
      r.witness = Witness{ModuleFamily::Hminus, "rank", std::to_string(lower), std::to_string(claim)};
      r.witness->family = witness_order()[0];
      r.detail += " exceeds the claim";
      return;
    }
    if (lower == claim && claim == s.exprs.size()) {
      r.status = Status::Proved;
      return;
    }
    // Upper bound: rank of the normal forms modulo the circle span.
    int bound = 0;
    for (const auto& e : s.exprs) bound = std::max(bound, ctx.weight_bound(*e));
    if (bound > r.max_weight) {
      r.status = Status::Unknown;
      r.detail += "; elements exceed max_weight, no upper bound";
      return;
    }
    const OSpanEchelon& ech = echelon(r.rank, r.max_weight, r.slack);
    std::map<Monomial, int> cols;
    std::vector<std::vector<std::pair<int, Rational>>> rows;
    for (const auto& e : s.exprs) {
      FockVector nf = ech.reduce(ctx.realize(*e));
      std::vector<std::pair<int, Rational>> row;
      for (const auto& [mono, c] : nf.terms()) {
        int col = cols.try_emplace(mono, static_cast<int>(cols.size())).first->second;
        row.emplace_back(col, c);
      }
      rows.push_back(std::move(row));
    }
    SparseEchelon<RationalField> ech2(static_cast<int>(cols.size()));
    for (auto& row : rows) {
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      ech2.insert(row);
    }
    std::size_t upper = ech2.rank();
    r.detail += ", normal-form rank " + std::to_string(upper);
    if (upper < claim) {
      r.status = Status::Disproved;
      r.witness = Witness{witness_order()[0], "rank", std::to_string(upper), std::to_string(claim)};
      r.detail += " is below the claim";
    } else if (lower == claim && upper == claim) {
      r.status = Status::Proved;
    } else {
      r.status = Status::Unknown;
    }
  }

  RunConfig config_;
  std::map<int, std::unique_ptr<Context>> contexts_;
  std::map<std::tuple<int, int, int>, std::unique_ptr<OSpanEchelon>> echelons_;
  std::size_t built_ = 0;
  std::size_t reuse_ = 0;
};

nlohmann::json to_json(const StatementResult& r, bool timing) {
  nlohmann::json j;
  j["line"] = r.line;
  j["kind"] = r.kind;
  j["statement"] = r.text;
  j["status"] = to_string(r.status);
  j["expect"] = to_string(r.expect);
  j["passed"] = r.passed();
  j["cutoff"] = {{"rank", r.rank}, {"max_weight", r.max_weight}, {"slack", r.slack}};
  if (r.witness) {
    j["witness"] = {{"family", to_string(r.witness->family)},
                    {"entry", r.witness->entry},
                    {"lhs", r.witness->lhs},
                    {"rhs", r.witness->rhs}};
  }
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (timing) j["seconds"] = r.seconds;
  return j;
}

}  // namespace

Report run_script(const std::vector<Statement>& script, const RunConfig& config, const std::string& name) {
  auto t0 = Clock::now();
  Report rep;
  rep.name = name;
  rep.config = config;
  Runner runner(config);
  for (const auto& s : script) rep.results.push_back(runner.run(s));
  rep.echelons_built = runner.built();
  rep.echelon_cache_hits = runner.cache_hits();
  rep.seconds = since(t0);
  return rep;
}

std::string report_json(const Report& r, bool timing) {
  nlohmann::json j;
  j["name"] = r.name;
  j["config"] = {{"rank", r.config.rank.ell()},
                 {"max_weight", r.config.max_weight},
                 {"slack", r.config.slack},
                 {"override_cutoffs", r.config.override_cutoffs}};
  j["passed"] = r.passed();
  j["counts"] = {{"proved", r.count(Status::Proved)},
                 {"disproved", r.count(Status::Disproved)},
                 {"unknown", r.count(Status::Unknown)},
                 {"error", r.count(Status::Error)}};
  j["statements"] = nlohmann::json::array();
  for (const auto& s : r.results) j["statements"].push_back(to_json(s, timing));
  if (timing) {
    j["echelons_built"] = r.echelons_built;
    j["echelon_cache_hits"] = r.echelon_cache_hits;
    j["seconds"] = r.seconds;
  }
  return j.dump(2) + "\n";
}

std::string report_text(const Report& r, bool timing) {
  std::ostringstream out;
  for (const auto& s : r.results) {
    out << (s.passed() ? "ok   " : "FAIL ") << to_string(s.status);
    if (s.expect != Expectation::Proved) out << " (expected " << to_string(s.expect) << ")";
    out << "  line " << s.line << ": " << s.text;
    if (s.witness) out << "\n       witness " << s.witness->to_string();
    if (!s.detail.empty() && s.status != Status::Proved) out << "\n       " << s.detail;
    if (timing) out << "  [" << std::fixed << std::setprecision(3) << s.seconds << "s]";
    out << "\n";
  }
  out << r.name << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.count(Status::Proved) << " proved, "
      << r.count(Status::Disproved) << " disproved, " << r.count(Status::Unknown) << " unknown, "
      << r.count(Status::Error) << " errors";
  if (timing) {
    out << "; " << r.echelons_built << " echelons, " << r.echelon_cache_hits << " cache hits, " << std::fixed
        << std::setprecision(2) << r.seconds << "s";
  }
  out << ")\n";
  return out.str();
}

Report run_suite(const Suite& suite, const RunConfig& config) {
  auto t0 = Clock::now();
  Report rep = run_script(parse_script(suite.script, config.rank), config, suite.name);
  for (const auto& c : suite.checks) {
    auto t1 = Clock::now();
    StatementResult r;
    try {
      r = c.run();
    } catch (const std::exception& ex) {
      r.status = Status::Error;
      r.detail = ex.what();
    }
    r.kind = "check";
    if (r.text.empty()) r.text = c.name;
    r.seconds = since(t1);
    rep.results.push_back(std::move(r));
  }
  rep.seconds = since(t0);
  return rep;
}

}  // namespace hzhu
