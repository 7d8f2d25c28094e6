#include "hzhu/fock.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

namespace hzhu {

Rank::Rank(int ell) : ell_(ell) {
  if (ell < 1) throw Error("rank must be at least 1");
  if (ell > 64) throw Error("rank above 64 is not supported");
}

std::string to_string(Sector s) { return s == Sector::Untwisted ? "untwisted" : "twisted"; }

std::string to_string(HalfInteger h) {
  if (h.is_integer()) return std::to_string(h.twice / 2);
  return std::to_string(h.twice) + "/2";
}

Monomial::Monomial(std::vector<Mode> modes) : modes_(std::move(modes)) {
  for (const auto& m : modes_) weight2_ -= m.twice;
}

std::uint64_t Monomial::sector_mask() const {
  std::uint64_t mask = 0;
  for (const auto& m : modes_) mask ^= std::uint64_t{1} << (m.gen - 1);
  return mask;
}

std::size_t Monomial::count(const Mode& m) const {
  auto [lo, hi] = std::equal_range(modes_.begin(), modes_.end(), m);
  return static_cast<std::size_t>(hi - lo);
}

Monomial Monomial::with(const Mode& m) const {
  Monomial r = *this;
  r.modes_.insert(std::upper_bound(r.modes_.begin(), r.modes_.end(), m), m);
  r.weight2_ -= m.twice;
  return r;
}

Monomial Monomial::without(const Mode& m) const {
  Monomial r = *this;
  auto it = std::lower_bound(r.modes_.begin(), r.modes_.end(), m);
  if (it == r.modes_.end() || *it != m) throw Error("mode not present in monomial");
  r.modes_.erase(it);
  r.weight2_ += m.twice;
  return r;
}

Monomial Monomial::operator*(const Monomial& o) const {
  std::vector<Mode> merged;
  merged.reserve(modes_.size() + o.modes_.size());
  std::merge(modes_.begin(), modes_.end(), o.modes_.begin(), o.modes_.end(), std::back_inserter(merged));
  return Monomial(std::move(merged));
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.weight2_ <=> b.weight2_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.modes_.begin(), a.modes_.end(), b.modes_.begin(),
                                                b.modes_.end());
}

namespace {

std::string mode_index_text(int twice) {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

}  // namespace

std::string to_string(const Monomial& m) {
  if (m.is_vacuum()) return "one";
  std::string out;
  for (const auto& md : m.modes()) {
    out += "h" + std::to_string(md.gen) + "(" + mode_index_text(md.twice) + ")";
  }
  return out;
}

Monomial make_monomial(Rank rank, Sector sector, std::span<const Mode> modes) {
  std::vector<Mode> v(modes.begin(), modes.end());
  for (const auto& m : v) {
    if (m.gen < 1 || m.gen > rank.ell()) throw Error("generator index out of range");
    if (m.twice >= 0) throw Error("annihilation index in monomial");
    bool twisted = m.is_twisted();
    if (twisted != (sector == Sector::Twisted)) throw Error("mode index does not match sector");
  }
  std::sort(v.begin(), v.end());
  return Monomial(std::move(v));
}

namespace {

void enumerate(const std::vector<Mode>& parts, std::size_t idx, int remaining, std::vector<Mode>& cur,
               std::vector<Monomial>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (idx == parts.size()) return;
  const Mode& p = parts[idx];
  int w = -p.twice;
  std::size_t base = cur.size();
  // Try every multiplicity of this part, including zero.
  enumerate(parts, idx + 1, remaining, cur, out);
  for (int k = 1; k * w <= remaining; ++k) {
    cur.push_back(p);
    enumerate(parts, idx + 1, remaining - k * w, cur, out);
  }
  cur.resize(base);
}

}  // namespace

std::vector<Monomial> basis(Rank rank, Sector sector, HalfInteger weight, ParityFilter filter) {
  if (weight.twice < 0) throw Error("negative weight");
  if (sector == Sector::Untwisted && !weight.is_integer()) return {};
  std::vector<Mode> parts;
  int first = sector == Sector::Untwisted ? 2 : 1;
  for (int g = 1; g <= rank.ell(); ++g) {
    for (int w = first; w <= weight.twice; w += 2) parts.push_back({g, -w});
  }
  std::sort(parts.begin(), parts.end());
  std::vector<Monomial> all;
  std::vector<Mode> cur;
  enumerate(parts, 0, weight.twice, cur, all);
  std::vector<Monomial> out;
  for (auto& m : all) {
    // `cur` was built in part order, which is already sorted.
    bool keep = filter == ParityFilter::All || (filter == ParityFilter::Even) == (m.parity() > 0);
    if (keep) out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Integer basis_dimension(Rank rank, Sector sector, HalfInteger weight, ParityFilter filter) {
  if (weight.twice < 0) return 0;
  if (sector == Sector::Untwisted && !weight.is_integer()) return 0;
  const int top = weight.twice;
  const int first = sector == Sector::Untwisted ? 2 : 1;
  // prod 1/(1 - s q^w)^ell over part weights w, for s = +1 and s = -1.
  auto series = [&](int s) {
    std::vector<Integer> a(top + 1, 0);
    a[0] = 1;
    for (int w = first; w <= top; w += 2) {
      for (int rep = 0; rep < rank.ell(); ++rep) {
        for (int i = w; i <= top; ++i) a[i] += s * a[i - w];
      }
    }
    return a[top];
  };
  Integer all = series(1);
  if (filter == ParityFilter::All) return all;
  Integer signed_count = series(-1);
  Integer even = (all + signed_count) / 2;
  return filter == ParityFilter::Even ? even : Integer(all - even);
}

PolyFockVector to_poly(const FockVector& v) {
  PolyFockVector out(v.sector());
  for (const auto& [m, c] : v.terms()) out.add_term(m, LambdaPoly(c));
  return out;
}

HalfInteger weight(const FockVector& v) {
  if (v.is_zero()) return {0};
  int w = v.terms().begin()->first.weight2();
  for (const auto& [m, c] : v.terms()) {
    if (m.weight2() != w) throw Error("vector is not homogeneous in mode-weight");
  }
  return {w};
}

std::map<HalfInteger, FockVector> homogeneous_components(const FockVector& v) {
  std::map<HalfInteger, FockVector> out;
  for (const auto& [m, c] : v.terms()) {
    auto it = out.try_emplace(m.weight(), FockVector(v.sector())).first;
    it->second.add_term(m, c);
  }
  return out;
}

HalfInteger max_weight(const FockVector& v) {
  // Monomials are ordered by weight first.
  if (v.is_zero()) return {0};
  return v.terms().rbegin()->first.weight();
}

bool is_even(const FockVector& v) {
  return std::all_of(v.terms().begin(), v.terms().end(), [](const auto& t) { return t.first.parity() > 0; });
}

template <class C>
BasicFockVector<C> apply_mode(int gen, int twice_n, const BasicFockVector<C>& v, const std::vector<C>* lambda) {
  bool twisted_index = twice_n % 2 != 0;
  Sector sector = twisted_index ? Sector::Twisted : Sector::Untwisted;
  if (!v.is_zero() && v.sector() != sector) throw Error("mode index does not match sector");
  BasicFockVector<C> out(v.is_zero() ? sector : v.sector());
  if (twice_n < 0) {
    Mode md{gen, twice_n};
    for (const auto& [m, c] : v.terms()) out.add_term(m.with(md), c);
  } else if (twice_n == 0) {
    if (lambda == nullptr) return out;
    if (gen < 1 || gen > static_cast<int>(lambda->size())) throw Error("generator index out of range");
    const C& l = (*lambda)[gen - 1];
    for (const auto& [m, c] : v.terms()) {
      C t = c;
      t *= l;
      out.add_term(m, t);
    }
  } else {
    Mode target{gen, -twice_n};
    Rational n(twice_n, 2);
    n.canonicalize();
    for (const auto& [m, c] : v.terms()) {
      std::size_t k = m.count(target);
      if (k == 0) continue;
      C t = c;
      scale_by(t, n * Rational(static_cast<long>(k)));
      out.add_term(m.without(target), t);
    }
  }
  return out;
}

template FockVector apply_mode(int, int, const FockVector&, const std::vector<Rational>*);
template PolyFockVector apply_mode(int, int, const PolyFockVector&, const std::vector<LambdaPoly>*);

namespace {

std::string coeff_text(const Rational& c) { return to_string(c); }
std::string coeff_text(const LambdaPoly& c) {
  std::string s = c.to_string();
  if (c.terms().size() > 1) return "(" + s + ")";
  return s;
}
bool negative_coeff(const Rational& c) { return sgn(c) < 0; }
bool negative_coeff(const LambdaPoly&) { return false; }

}  // namespace

template <class C>
std::string to_string(const BasicFockVector<C>& v) {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : v.terms()) {
    C a = c;
    bool neg = negative_coeff(c);
    if (neg) a = -c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (!(a == C(1))) out += coeff_text(a) + "*";
    out += to_string(m);
  }
  return out;
}

template std::string to_string(const FockVector&);
template std::string to_string(const PolyFockVector&);

namespace {

class VectorParser {
public:
  explicit VectorParser(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error("parse error at offset " + std::to_string(pos_) + ": " + what);
  }
  bool consume(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool peek_monomial() {
    skip_ws();
    return pos_ < s_.size() && (s_[pos_] == 'h' || s_.substr(pos_, 3) == "one");
  }
  std::string_view number_token() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
    if (pos_ == start) fail("expected number");
    return s_.substr(start, pos_ - start);
  }
  int integer() {
    auto t = number_token();
    try {
      return std::stoi(std::string(t));
    } catch (...) {
      fail("bad integer");
    }
  }

  Monomial monomial(Sector* sector_out) {
    skip_ws();
    if (s_.substr(pos_, 3) == "one") {
      pos_ += 3;
      return Monomial{};
    }
    std::vector<Mode> modes;
    std::optional<bool> twisted;
    while (pos_ < s_.size() && s_[pos_] == 'h') {
      ++pos_;
      int gen = integer();
      if (gen < 1) fail("generator index must be positive");
      if (!consume('(')) fail("expected '('");
      Rational n;
      try {
        n = parse_rational(number_token());
      } catch (const Error&) {
        fail("bad mode index");
      }
      if (!consume(')')) fail("expected ')'");
      Rational twice = 2 * n;
      if (twice.get_den() != 1) fail("mode index must be a half-integer");
      int t = static_cast<int>(twice.get_num().get_si());
      if (t >= 0) fail("mode index must be negative");
      bool tw = t % 2 != 0;
      if (twisted && *twisted != tw) fail("mixed sectors in one monomial");
      twisted = tw;
      int power = 1;
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        power = integer();
        if (power < 1) fail("exponent must be positive");
      }
      for (int i = 0; i < power; ++i) modes.push_back({gen, t});
    }
    if (modes.empty()) fail("expected monomial");
    std::sort(modes.begin(), modes.end());
    if (sector_out) *sector_out = twisted.value_or(false) ? Sector::Twisted : Sector::Untwisted;
    return Monomial(std::move(modes));
  }

  FockVector vector() {
    if (at_end()) fail("empty input");
    skip_ws();
    if (s_.substr(pos_) == "0") return FockVector{};
    FockVector out;
    std::optional<Sector> sector;
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (consume('+')) {
      } else if (consume('-')) {
        sign = -1;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Rational c(sign);
      skip_ws();
      if (!peek_monomial()) {
        c *= parse_rational(number_token());
        if (!consume('*')) {
          // A bare number is a multiple of the vacuum.
          add(out, sector, Monomial{}, Sector::Untwisted, c);
          continue;
        }
      }
      Sector s = Sector::Untwisted;
      Monomial m = monomial(&s);
      add(out, sector, m, s, c);
    }
    return out;
  }

private:
  void add(FockVector& out, std::optional<Sector>& sector, const Monomial& m, Sector s, const Rational& c) {
    if (!m.is_vacuum()) {
      if (sector && *sector != s) fail("mixed sectors in one vector");
      sector = s;
    }
    FockVector term(sector.value_or(Sector::Untwisted), m, c);
    if (out.is_zero()) {
      out = term;
      return;
    }
    if (out.sector() != term.sector()) {
      // Only the vacuum can precede the first sector-bearing monomial.
      FockVector moved(term.sector());
      for (const auto& [mm, cc] : out.terms()) moved.add_term(mm, cc);
      out = moved;
    }
    out += term;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Monomial parse_monomial(std::string_view text, Sector* sector_out) {
  VectorParser p(text);
  Monomial m = p.monomial(sector_out);
  if (!p.at_end()) p.fail("trailing input");
  return m;
}

FockVector parse_fock_vector(std::string_view text) { return VectorParser(text).vector(); }

}  // namespace hzhu
