#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hzhu/fock.hpp"
#include "hzhu/lambda_poly.hpp"

namespace hzhu {

/// The five known irreducible H+-module families, by top level:
/// Hplus {1}, Hminus {h_a(-1)1}, Mlambda {hw}, Tplus {1_tw}, Tminus {h_a(-1/2)1_tw}.
enum class ModuleFamily { Hplus, Hminus, Mlambda, Tplus, Tminus };

std::string to_string(ModuleFamily f);
std::optional<ModuleFamily> parse_family(std::string_view s);
/// Order used for witnesses: the discriminating families first.
const std::array<ModuleFamily, 5>& witness_order();
/// Natural order Hplus, Hminus, Mlambda, Tplus, Tminus.
const std::array<ModuleFamily, 5>& all_families();
int top_level_dimension(ModuleFamily f, Rank rank);

/// Square rational matrix. Entry (i, j) is the coefficient of basis vector i
/// in the image of basis vector j, so products compose like operators.
class RMatrix {
public:
  explicit RMatrix(int n = 0) : n_(n), a_(static_cast<std::size_t>(n) * n, Rational(0)) {}
  static RMatrix identity(int n);
  /// E_ab: 1 at (a, b), 1-based.
  static RMatrix unit(int n, int a, int b);

  int size() const { return n_; }
  const Rational& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  bool is_zero() const;

  RMatrix& operator+=(const RMatrix& o);
  RMatrix& operator-=(const RMatrix& o);
  RMatrix& operator*=(const Rational& c);
  RMatrix operator*(const RMatrix& o) const;
  friend RMatrix operator*(const Rational& c, RMatrix x) { return x *= c; }
  friend RMatrix operator+(RMatrix x, const RMatrix& y) { return x += y; }
  friend RMatrix operator-(RMatrix x, const RMatrix& y) { return x -= y; }
  friend bool operator==(const RMatrix& x, const RMatrix& y) = default;

  /// "[[0,-35/32],[-5/32,0]]".
  std::string to_string() const;

private:
  int n_;
  std::vector<Rational> a_;
};

RMatrix parse_matrix(std::string_view text);

/// Value of o(u) on one top level.
class TopLevelAction {
public:
  enum class Kind { Scalar, Poly, Matrix };

  TopLevelAction() : value_(Rational(0)) {}
  TopLevelAction(Rational q) : value_(std::move(q)) {}      // NOLINT
  TopLevelAction(LambdaPoly p) : value_(std::move(p)) {}    // NOLINT
  TopLevelAction(RMatrix m) : value_(std::move(m)) {}       // NOLINT

  /// Zero and identity of the family's operator algebra.
  static TopLevelAction zero(ModuleFamily f, Rank rank);
  static TopLevelAction one(ModuleFamily f, Rank rank);
  static Kind kind_of(ModuleFamily f);

  Kind kind() const { return static_cast<Kind>(value_.index()); }
  const Rational& scalar() const { return std::get<Rational>(value_); }
  const LambdaPoly& poly() const { return std::get<LambdaPoly>(value_); }
  const RMatrix& matrix() const { return std::get<RMatrix>(value_); }
  bool is_zero() const;

  TopLevelAction& operator+=(const TopLevelAction& o);
  TopLevelAction& operator-=(const TopLevelAction& o);
  TopLevelAction& operator*=(const Rational& c);
  /// Composition o(x) o(y), which equals o(x * y).
  TopLevelAction operator*(const TopLevelAction& o) const;
  friend TopLevelAction operator+(TopLevelAction x, const TopLevelAction& y) { return x += y; }
  friend TopLevelAction operator-(TopLevelAction x, const TopLevelAction& y) { return x -= y; }
  friend bool operator==(const TopLevelAction& x, const TopLevelAction& y) { return x.value_ == y.value_; }

  std::string to_string() const;

  /// Flattened coordinates keyed by a label (matrix entry or lambda monomial).
  std::vector<std::pair<std::string, Rational>> coordinates() const;

private:
  std::variant<Rational, LambdaPoly, RMatrix> value_;
};

/// Parses the to_string form for the given family kind.
TopLevelAction parse_action(ModuleFamily f, std::string_view text);

/// o(u) on the top level of `f`. u must be even.
TopLevelAction evaluate(const FockVector& u, ModuleFamily f, Rank rank);

/// Product of the evaluations, left to right.
TopLevelAction evaluate_word(const std::vector<FockVector>& factors, ModuleFamily f, Rank rank);

struct Witness {
  ModuleFamily family;
  std::string entry;  // "(i,j)", "coefficient of l1*l2" or "value"
  std::string lhs;
  std::string rhs;
  std::string to_string() const;
};

/// Witness for one family, nullopt if the two actions agree.
std::optional<Witness> compare_action(ModuleFamily f, const TopLevelAction& x, const TopLevelAction& y);

/// First family in witness order where the actions differ.
std::optional<Witness> compare_actions(const std::array<TopLevelAction, 5>& x,
                                       const std::array<TopLevelAction, 5>& y);

/// Evaluations on all five families, indexed like all_families().
std::array<TopLevelAction, 5> evaluate_all(const FockVector& u, Rank rank);

std::optional<Witness> disprove_equiv(const FockVector& x, const FockVector& y, Rank rank);

/// Rank of the evaluation functionals of the elements on all five families.
std::size_t independence_rank(const std::vector<FockVector>& elements, Rank rank);
std::size_t independence_rank(const std::vector<std::array<TopLevelAction, 5>>& evaluations);

/// Conformal weight shift of the top level (<lambda,lambda>/2 is symbolic
/// and returned as a string; ell/16 for twisted families).
std::string top_level_shift(ModuleFamily f, Rank rank);

}  // namespace hzhu
