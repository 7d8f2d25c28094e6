#include "hzhu/lambda_poly.hpp"

#include <algorithm>
#include <cctype>

namespace hzhu {

namespace {

void trim(LambdaPoly::Exponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

}  // namespace

LambdaPoly::LambdaPoly(const Rational& c) {
  if (!hzhu::is_zero(c)) terms_.emplace(Exponents{}, c);
}

LambdaPoly LambdaPoly::variable(int index) {
  if (index < 1) throw Error("lambda variable index must be positive");
  LambdaPoly p;
  Exponents e(static_cast<std::size_t>(index), 0);
  e.back() = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

Rational LambdaPoly::constant() const {
  auto it = terms_.find(Exponents{});
  return it == terms_.end() ? Rational(0) : it->second;
}

int LambdaPoly::max_variable() const {
  int m = 0;
  for (const auto& [e, c] : terms_) m = std::max(m, static_cast<int>(e.size()));
  return m;
}

void LambdaPoly::add_term(Exponents exps, const Rational& c) {
  if (hzhu::is_zero(c)) return;
  trim(exps);
  auto [it, inserted] = terms_.try_emplace(std::move(exps), c);
  if (!inserted) {
    it->second += c;
    if (hzhu::is_zero(it->second)) terms_.erase(it);
  }
}

LambdaPoly& LambdaPoly::operator+=(const LambdaPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LambdaPoly& LambdaPoly::operator-=(const LambdaPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LambdaPoly& LambdaPoly::operator*=(const LambdaPoly& o) {
  LambdaPoly out;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(std::max(ea.size(), eb.size()), 0);
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      out.add_term(std::move(e), ca * cb);
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

LambdaPoly& LambdaPoly::operator*=(const Rational& c) {
  if (hzhu::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LambdaPoly LambdaPoly::operator-() const {
  LambdaPoly p = *this;
  p *= Rational(-1);
  return p;
}

std::string LambdaPoly::to_string() const {
  if (terms_.empty()) return "0";
  // Highest total degree first, then reverse lexicographic map order, so
  // that "l1^4 - 1/2*l1^2" reads the usual way.
  std::vector<const Terms::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  auto degree = [](const Exponents& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
  };
  std::stable_sort(order.begin(), order.end(), [&](auto* a, auto* b) {
    int da = degree(a->first), db = degree(b->first);
    if (da != db) return da > db;
    return a->first > b->first;
  });
  std::string out;
  bool first = true;
  for (const auto* t : order) {
    const auto& [e, c] = *t;
    Rational mag = abs(c);
    bool neg = sgn(c) < 0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "l" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += hzhu::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += hzhu::to_string(mag) + "*" + mono;
    }
  }
  return out;
}

std::string to_string(const LambdaPoly& p) { return p.to_string(); }

namespace {

class PolyParser {
public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  LambdaPoly parse() {
    LambdaPoly result;
    skip_ws();
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      LambdaPoly term = parse_term();
      term *= Rational(sign);
      result += term;
      skip_ws();
    }
    if (first) fail("empty polynomial");
    return result;
  }

private:
  LambdaPoly parse_term() {
    LambdaPoly term(1);
    bool any = false;
    for (;;) {
      skip_ws();
      if (peek() == 'l') {
        ++pos_;
        int idx = parse_uint();
        int power = 1;
        if (peek() == '^') {
          ++pos_;
          power = parse_uint();
        }
        LambdaPoly v = LambdaPoly::variable(idx);
        for (int i = 0; i < power; ++i) term *= v;
      } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/'))
          ++pos_;
        term *= parse_rational(s_.substr(start, pos_ - start));
      } else {
        fail("expected factor");
      }
      any = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    return term;
  }

  int parse_uint() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return s_[pos_++]; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

LambdaPoly parse_lambda_poly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace hzhu
