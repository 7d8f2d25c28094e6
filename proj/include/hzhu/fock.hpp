#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hzhu/lambda_poly.hpp"
#include "hzhu/rational.hpp"

namespace hzhu {

/// Number of orthonormal generators h_1..h_ell.
class Rank {
public:
  explicit Rank(int ell);
  int ell() const { return ell_; }
  friend bool operator==(Rank, Rank) = default;

private:
  int ell_;
};

/// Untwisted modes live in Z, twisted modes in Z + 1/2.
enum class Sector : std::uint8_t { Untwisted, Twisted };

std::string to_string(Sector s);

/// A half-integer stored as twice its value.
struct HalfInteger {
  int twice = 0;

  static HalfInteger from_integer(int n) { return {2 * n}; }
  bool is_integer() const { return twice % 2 == 0; }
  Rational value() const { return ratio(twice, 2); }
  friend auto operator<=>(HalfInteger, HalfInteger) = default;
};

std::string to_string(HalfInteger h);

/// The operator h_gen(n); n is stored as twice its value so that one type
/// covers both sectors (even twice-values untwisted, odd ones twisted).
struct Mode {
  int gen = 1;
  int twice = 0;

  static Mode integral(int gen, int n) { return {gen, 2 * n}; }
  bool is_creation() const { return twice < 0; }
  bool is_twisted() const { return twice % 2 != 0; }
  Rational index() const { return ratio(twice, 2); }
  friend auto operator<=>(const Mode&, const Mode&) = default;
};

/// Canonical product of creation modes applied to the vacuum.
///
/// Modes are kept sorted by (gen, n), so h1(-3) precedes h1(-1). Monomials
/// compare by mode-weight first and lexicographically on the sorted modes
/// after that; this order drives basis enumeration, pivots and printing.
class Monomial {
public:
  Monomial() = default;
  /// Unchecked: `modes` are sorted but not validated.
  explicit Monomial(std::vector<Mode> modes);

  const std::vector<Mode>& modes() const { return modes_; }
  std::size_t length() const { return modes_.size(); }
  bool is_vacuum() const { return modes_.empty(); }
  /// Twice the mode-weight, i.e. sum of -2n over the modes.
  int weight2() const { return weight2_; }
  HalfInteger weight() const { return {weight2_}; }
  /// +1 for an even number of modes, -1 otherwise.
  int parity() const { return modes_.size() % 2 == 0 ? 1 : -1; }
  /// Bit a-1 set when h_a occurs an odd number of times.
  std::uint64_t sector_mask() const;
  std::size_t count(const Mode& m) const;

  Monomial with(const Mode& m) const;
  /// Removes one occurrence; the mode must be present.
  Monomial without(const Mode& m) const;
  Monomial operator*(const Monomial& o) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.modes_ == b.modes_; }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

private:
  std::vector<Mode> modes_;
  int weight2_ = 0;
};

/// "h1(-3)h1(-1)", "h2(-1/2)" or "one".
std::string to_string(const Monomial& m);

/// Validated construction: every index must be a creation index of the
/// sector and every generator in 1..ell. Order of `modes` is irrelevant.
Monomial make_monomial(Rank rank, Sector sector, std::span<const Mode> modes);

enum class ParityFilter : std::uint8_t { Even, Odd, All };

/// All monomials of the given mode-weight, in monomial order.
std::vector<Monomial> basis(Rank rank, Sector sector, HalfInteger weight, ParityFilter filter);

/// Dimension of the weight space, from the coloured partition generating
/// function (independent of `basis`).
Integer basis_dimension(Rank rank, Sector sector, HalfInteger weight, ParityFilter filter);

inline void scale_by(Rational& c, const Rational& s) { c *= s; }
inline void scale_by(LambdaPoly& c, const Rational& s) { c *= s; }

/// Finite linear combination of monomials of one sector with coefficients
/// in C (Rational or LambdaPoly). Zero coefficients are never stored.
template <class C>
class BasicFockVector {
public:
  using Terms = std::map<Monomial, C>;

  explicit BasicFockVector(Sector sector = Sector::Untwisted) : sector_(sector) {}
  BasicFockVector(Sector sector, const Monomial& m, C c = C(1)) : sector_(sector) { add_term(m, c); }

  static BasicFockVector vacuum(Sector sector = Sector::Untwisted) { return BasicFockVector(sector, Monomial{}); }

  Sector sector() const { return sector_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  C coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? C(0) : it->second;
  }

  void add_term(const Monomial& m, const C& c) {
    if (hzhu::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (hzhu::is_zero(it->second)) terms_.erase(it);
    }
  }

  BasicFockVector& operator+=(const BasicFockVector& o) {
    check_sector(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  BasicFockVector& operator-=(const BasicFockVector& o) {
    check_sector(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  BasicFockVector& operator*=(const Rational& s) {
    if (hzhu::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) scale_by(c, s);
    return *this;
  }
  BasicFockVector operator-() const {
    BasicFockVector r = *this;
    r *= Rational(-1);
    return r;
  }

  friend BasicFockVector operator+(BasicFockVector a, const BasicFockVector& b) { return a += b; }
  friend BasicFockVector operator-(BasicFockVector a, const BasicFockVector& b) { return a -= b; }
  friend BasicFockVector operator*(const Rational& s, BasicFockVector v) { return v *= s; }
  friend bool operator==(const BasicFockVector& a, const BasicFockVector& b) {
    return a.terms_ == b.terms_ && (a.terms_.empty() || a.sector_ == b.sector_);
  }

private:
  void check_sector(const BasicFockVector& o) {
    if (o.terms_.empty()) return;
    if (terms_.empty()) {
      sector_ = o.sector_;
    } else if (o.sector_ != sector_) {
      throw Error("sector mismatch");
    }
  }

  Sector sector_;
  Terms terms_;
};

using FockVector = BasicFockVector<Rational>;
using PolyFockVector = BasicFockVector<LambdaPoly>;

/// Promotes rational coefficients to constant polynomials.
PolyFockVector to_poly(const FockVector& v);

/// Mode-weight of a homogeneous vector; throws on inhomogeneous input.
/// The zero vector has weight 0.
HalfInteger weight(const FockVector& v);

/// Splits v by mode-weight.
std::map<HalfInteger, FockVector> homogeneous_components(const FockVector& v);

/// Largest mode-weight present (0 for the zero vector).
HalfInteger max_weight(const FockVector& v);

/// True when every term has an even number of modes.
bool is_even(const FockVector& v);

/// The involution scaling each monomial by (-1)^length.
template <class C>
BasicFockVector<C> theta(const BasicFockVector<C>& v) {
  BasicFockVector<C> out(v.sector());
  for (const auto& [m, c] : v.terms()) {
    if (m.parity() > 0) {
      out.add_term(m, c);
    } else {
      out.add_term(m, -c);
    }
  }
  return out;
}

/// h_gen(n) acting on v; `twice_n` is 2n. Annihilation contracts with
/// [h_a(m), h_b(k)] = m delta_ab delta_{m+k,0}. The zero mode multiplies
/// by lambda[gen-1] when `lambda` is given and by zero otherwise.
template <class C>
BasicFockVector<C> apply_mode(int gen, int twice_n, const BasicFockVector<C>& v,
                              const std::vector<C>* lambda = nullptr);

/// Text form: terms "c*monomial" joined by " + " / " - ", "0" if empty.
template <class C>
std::string to_string(const BasicFockVector<C>& v);

/// Parses "h1(-3)h1(-1)", "h2(-1/2)", "one".
Monomial parse_monomial(std::string_view text, Sector* sector_out = nullptr);

/// Parses a linear combination such as "1/2*h1(-1)h1(-1) - one".
FockVector parse_fock_vector(std::string_view text);

}  // namespace hzhu
