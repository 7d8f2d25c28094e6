#include "hzhu/eval.hpp"

#include <cctype>
#include <map>

#include "hzhu/echelon.hpp"
#include "hzhu/twisted.hpp"
#include "hzhu/vertex.hpp"

namespace hzhu {

std::string to_string(ModuleFamily f) {
  switch (f) {
    case ModuleFamily::Hplus:
      return "Hplus";
    case ModuleFamily::Hminus:
      return "Hminus";
    case ModuleFamily::Mlambda:
      return "Mlambda";
    case ModuleFamily::Tplus:
      return "Tplus";
    case ModuleFamily::Tminus:
      return "Tminus";
  }
  return "?";
}

std::optional<ModuleFamily> parse_family(std::string_view s) {
  for (auto f : all_families()) {
    if (to_string(f) == s) return f;
  }
  return std::nullopt;
}

const std::array<ModuleFamily, 5>& witness_order() {
  static const std::array<ModuleFamily, 5> order{ModuleFamily::Hminus, ModuleFamily::Mlambda, ModuleFamily::Tminus,
                                                  ModuleFamily::Hplus, ModuleFamily::Tplus};
  return order;
}

const std::array<ModuleFamily, 5>& all_families() {
  static const std::array<ModuleFamily, 5> order{ModuleFamily::Hplus, ModuleFamily::Hminus, ModuleFamily::Mlambda,
                                                  ModuleFamily::Tplus, ModuleFamily::Tminus};
  return order;
}

int top_level_dimension(ModuleFamily f, Rank rank) {
  return (f == ModuleFamily::Hminus || f == ModuleFamily::Tminus) ? rank.ell() : 1;
}

RMatrix RMatrix::identity(int n) {
  RMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RMatrix RMatrix::unit(int n, int a, int b) {
  if (a < 1 || a > n || b < 1 || b > n) throw Error("matrix unit index out of range");
  RMatrix m(n);
  m.at(a - 1, b - 1) = 1;
  return m;
}

bool RMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

RMatrix& RMatrix::operator+=(const RMatrix& o) {
  if (o.n_ != n_) throw Error("matrix size mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

RMatrix& RMatrix::operator-=(const RMatrix& o) {
  if (o.n_ != n_) throw Error("matrix size mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

RMatrix& RMatrix::operator*=(const Rational& c) {
  for (auto& x : a_) x *= c;
  return *this;
}

RMatrix RMatrix::operator*(const RMatrix& o) const {
  if (o.n_ != n_) throw Error("matrix size mismatch");
  RMatrix r(n_);
  for (int i = 0; i < n_; ++i) {
    for (int k = 0; k < n_; ++k) {
      if (sgn(at(i, k)) == 0) continue;
      for (int j = 0; j < n_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  }
  return r;
}

std::string RMatrix::to_string() const {
  std::string s = "[";
  for (int i = 0; i < n_; ++i) {
    if (i) s += ",";
    s += "[";
    for (int j = 0; j < n_; ++j) {
      if (j) s += ",";
      s += hzhu::to_string(at(i, j));
    }
    s += "]";
  }
  return s + "]";
}

RMatrix parse_matrix(std::string_view text) {
  std::vector<std::vector<Rational>> rows;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto expect = [&](char c) {
    skip();
    if (i >= text.size() || text[i] != c) throw Error(std::string("matrix text: expected '") + c + "'");
    ++i;
  };
  expect('[');
  skip();
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    while (true) {
      expect('[');
      std::vector<Rational> row;
      while (true) {
        skip();
        std::size_t start = i;
        while (i < text.size() && text[i] != ',' && text[i] != ']' && !std::isspace(static_cast<unsigned char>(text[i])))
          ++i;
        row.push_back(parse_rational(text.substr(start, i - start)));
        skip();
        if (i < text.size() && text[i] == ',') {
          ++i;
          continue;
        }
        expect(']');
        break;
      }
      rows.push_back(std::move(row));
      skip();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      expect(']');
      break;
    }
  }
  skip();
  if (i != text.size()) throw Error("matrix text: trailing input");
  RMatrix m(static_cast<int>(rows.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) throw Error("matrix text: not square");
    for (std::size_t c = 0; c < rows.size(); ++c) m.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
  }
  return m;
}

TopLevelAction::Kind TopLevelAction::kind_of(ModuleFamily f) {
  switch (f) {
    case ModuleFamily::Hminus:
    case ModuleFamily::Tminus:
      return Kind::Matrix;
    case ModuleFamily::Mlambda:
      return Kind::Poly;
    default:
      return Kind::Scalar;
  }
}

TopLevelAction TopLevelAction::zero(ModuleFamily f, Rank rank) {
  switch (kind_of(f)) {
    case Kind::Matrix:
      return RMatrix(rank.ell());
    case Kind::Poly:
      return LambdaPoly();
    default:
      return Rational(0);
  }
}

TopLevelAction TopLevelAction::one(ModuleFamily f, Rank rank) {
  switch (kind_of(f)) {
    case Kind::Matrix:
      return RMatrix::identity(rank.ell());
    case Kind::Poly:
      return LambdaPoly(1);
    default:
      return Rational(1);
  }
}

bool TopLevelAction::is_zero() const {
  switch (kind()) {
    case Kind::Scalar:
      return sgn(scalar()) == 0;
    case Kind::Poly:
      return poly().is_zero();
    case Kind::Matrix:
      return matrix().is_zero();
  }
  return false;
}

TopLevelAction& TopLevelAction::operator+=(const TopLevelAction& o) {
  if (o.kind() != kind()) throw Error("action kind mismatch");
  std::visit(
      [&](auto& x) {
        using T = std::decay_t<decltype(x)>;
        x += std::get<T>(o.value_);
      },
      value_);
  return *this;
}

TopLevelAction& TopLevelAction::operator-=(const TopLevelAction& o) {
  if (o.kind() != kind()) throw Error("action kind mismatch");
  std::visit(
      [&](auto& x) {
        using T = std::decay_t<decltype(x)>;
        x -= std::get<T>(o.value_);
      },
      value_);
  return *this;
}

TopLevelAction& TopLevelAction::operator*=(const Rational& c) {
  std::visit([&](auto& x) { x *= c; }, value_);
  return *this;
}

TopLevelAction TopLevelAction::operator*(const TopLevelAction& o) const {
  if (o.kind() != kind()) throw Error("action kind mismatch");
  return std::visit(
      [&](const auto& x) -> TopLevelAction {
        using T = std::decay_t<decltype(x)>;
        return TopLevelAction(x * std::get<T>(o.value_));
      },
      value_);
}

std::string TopLevelAction::to_string() const {
  switch (kind()) {
    case Kind::Scalar:
      return hzhu::to_string(scalar());
    case Kind::Poly:
      return poly().to_string();
    case Kind::Matrix:
      return matrix().to_string();
  }
  return "";
}

std::vector<std::pair<std::string, Rational>> TopLevelAction::coordinates() const {
  std::vector<std::pair<std::string, Rational>> out;
  switch (kind()) {
    case Kind::Scalar:
      out.emplace_back("value", scalar());
      break;
    case Kind::Poly:
      for (const auto& [exps, c] : poly().terms()) {
        LambdaPoly mono;
        mono.add_term(exps, 1);
        out.emplace_back(mono.to_string(), c);
      }
      break;
    case Kind::Matrix: {
      const auto& m = matrix();
      for (int i = 0; i < m.size(); ++i) {
        for (int j = 0; j < m.size(); ++j) {
          out.emplace_back("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")", m.at(i, j));
        }
      }
      break;
    }
  }
  return out;
}

TopLevelAction parse_action(ModuleFamily f, std::string_view text) {
  switch (TopLevelAction::kind_of(f)) {
    case TopLevelAction::Kind::Matrix:
      return parse_matrix(text);
    case TopLevelAction::Kind::Poly:
      return parse_lambda_poly(text);
    default:
      return parse_rational(text);
  }
}

namespace {

FockVector twisted_state(int gen) {
  if (gen == 0) return FockVector::vacuum(Sector::Twisted);
  return FockVector(Sector::Twisted, Monomial({Mode{gen, -1}}));
}

}  // namespace

TopLevelAction evaluate(const FockVector& u, ModuleFamily f, Rank rank) {
  if (!is_even(u)) throw Error("evaluate needs an even state");
  if (!u.is_zero() && u.sector() != Sector::Untwisted) throw Error("evaluate needs an untwisted state");
  for (const auto& [m, c] : u.terms()) {
    for (const auto& md : m.modes()) {
      if (md.gen > rank.ell()) throw Error("state uses a generator beyond the rank");
    }
  }
  const int ell = rank.ell();
  switch (f) {
    case ModuleFamily::Hplus: {
      FockVector r = zero_mode<Rational>(u, FockVector::vacuum());
      return r.coefficient(Monomial{});
    }
    case ModuleFamily::Tplus: {
      const FockVector vac = twisted_state(0);
      FockVector r = twisted_zero_mode(u, vac);
      return r.coefficient(Monomial{});
    }
    case ModuleFamily::Mlambda: {
      std::vector<LambdaPoly> lambda;
      for (int a = 1; a <= ell; ++a) lambda.push_back(LambdaPoly::variable(a));
      PolyFockVector r = zero_mode<LambdaPoly>(u, PolyFockVector::vacuum(), &lambda);
      return r.coefficient(Monomial{});
    }
    case ModuleFamily::Hminus: {
      RMatrix m(ell);
      for (int j = 1; j <= ell; ++j) {
        FockVector col = zero_mode<Rational>(u, FockVector(Sector::Untwisted, Monomial({Mode::integral(j, -1)})));
        for (const auto& [mono, c] : col.terms()) {
          if (mono.length() != 1) throw Error("zero mode left the top level");
          m.at(mono.modes()[0].gen - 1, j - 1) = c;
        }
      }
      return m;
    }
    case ModuleFamily::Tminus: {
      RMatrix m(ell);
      for (int j = 1; j <= ell; ++j) {
        FockVector col = twisted_zero_mode(u, twisted_state(j));
        for (const auto& [mono, c] : col.terms()) {
          if (mono.length() != 1) throw Error("zero mode left the top level");
          m.at(mono.modes()[0].gen - 1, j - 1) = c;
        }
      }
      return m;
    }
  }
  throw Error("unknown module family");
}

TopLevelAction evaluate_word(const std::vector<FockVector>& factors, ModuleFamily f, Rank rank) {
  TopLevelAction acc = TopLevelAction::one(f, rank);
  for (const auto& x : factors) acc = acc * evaluate(x, f, rank);
  return acc;
}

std::string Witness::to_string() const {
  return hzhu::to_string(family) + " " + entry + ": " + lhs + " vs " + rhs;
}

std::array<TopLevelAction, 5> evaluate_all(const FockVector& u, Rank rank) {
  std::array<TopLevelAction, 5> out;
  for (std::size_t i = 0; i < 5; ++i) out[i] = evaluate(u, all_families()[i], rank);
  return out;
}

namespace {

std::size_t family_index(ModuleFamily f) {
  for (std::size_t i = 0; i < 5; ++i) {
    if (all_families()[i] == f) return i;
  }
  return 0;
}

}  // namespace

std::optional<Witness> compare_action(ModuleFamily f, const TopLevelAction& x, const TopLevelAction& y) {
  if (x == y) return std::nullopt;
  std::map<std::string, std::pair<Rational, Rational>> coords;
  for (const auto& [k, v] : x.coordinates()) coords[k].first = v;
  for (const auto& [k, v] : y.coordinates()) coords[k].second = v;
  // Matrix coordinates come in row-major order; keep it for the report.
  if (x.kind() == TopLevelAction::Kind::Matrix) {
    for (const auto& [k, v] : x.coordinates()) {
      const auto& p = coords[k];
      if (p.first != p.second) return Witness{f, k, to_string(p.first), to_string(p.second)};
    }
  }
  for (const auto& [k, p] : coords) {
    if (p.first != p.second) {
      std::string entry = x.kind() == TopLevelAction::Kind::Poly ? "coefficient of " + k : k;
      return Witness{f, entry, to_string(p.first), to_string(p.second)};
    }
  }
  return Witness{f, "value", x.to_string(), y.to_string()};
}

std::optional<Witness> compare_actions(const std::array<TopLevelAction, 5>& x, const std::array<TopLevelAction, 5>& y) {
  for (auto f : witness_order()) {
    std::size_t i = family_index(f);
    if (auto w = compare_action(f, x[i], y[i])) return w;
  }
  return std::nullopt;
}

std::optional<Witness> disprove_equiv(const FockVector& x, const FockVector& y, Rank rank) {
  for (auto f : witness_order()) {
    if (auto w = compare_action(f, evaluate(x, f, rank), evaluate(y, f, rank))) return w;
  }
  return std::nullopt;
}

std::size_t independence_rank(const std::vector<std::array<TopLevelAction, 5>>& evaluations) {
  std::map<std::string, int> index;
  std::vector<std::vector<std::pair<int, Rational>>> rows;
  for (const auto& ev : evaluations) {
    std::vector<std::pair<int, Rational>> row;
    for (std::size_t i = 0; i < 5; ++i) {
      for (const auto& [k, v] : ev[i].coordinates()) {
        if (sgn(v) == 0) continue;
        auto key = to_string(all_families()[i]) + ":" + k;
        int c = index.try_emplace(key, static_cast<int>(index.size())).first->second;
        row.emplace_back(c, v);
      }
    }
    rows.push_back(std::move(row));
  }
  SparseEchelon<RationalField> e(static_cast<int>(index.size()));
  for (auto& row : rows) {
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    e.insert(row);
  }
  return e.rank();
}

std::size_t independence_rank(const std::vector<FockVector>& elements, Rank rank) {
  std::vector<std::array<TopLevelAction, 5>> evs;
  for (const auto& u : elements) evs.push_back(evaluate_all(u, rank));
  return independence_rank(evs);
}

std::string top_level_shift(ModuleFamily f, Rank rank) {
  switch (f) {
    case ModuleFamily::Hplus:
      return "0";
    case ModuleFamily::Hminus:
      return "1";
    case ModuleFamily::Mlambda:
      return "<lambda,lambda>/2";
    case ModuleFamily::Tplus:
      return to_string(Rational(rank.ell(), 16));
    case ModuleFamily::Tminus:
      return to_string(ratio(rank.ell(), 16) + Rational(1, 2));
  }
  return "";
}

}  // namespace hzhu
