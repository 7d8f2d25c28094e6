#include "hzhu/rational.hpp"

#include <cctype>

namespace hzhu {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_text(text)) throw Error("invalid rational '" + std::string(text) + "'");
    return Rational(parse_integer(text));
  }
  auto num = text.substr(0, slash);
  auto den = text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+')
    throw Error("invalid rational '" + std::string(text) + "'");
  Integer d = parse_integer(den);
  if (d == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  Rational q(parse_integer(num), d);
  q.canonicalize();
  return q;
}

Rational binomial(const Rational& top, int k) {
  if (k < 0) return 0;
  Rational result = 1;
  for (int j = 0; j < k; ++j) {
    result *= top - j;
    result /= j + 1;
  }
  return result;
}

Rational binomial(long n, int k) { return binomial(Rational(n), k); }

}  // namespace hzhu
