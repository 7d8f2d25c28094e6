#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hzhu/rational.hpp"

namespace hzhu {

/// Arithmetic of Q, used by SparseEchelon.
struct RationalField {
  using Value = Rational;
  static Value zero() { return Value(0); }
  static bool is_zero(const Value& v) { return sgn(v) == 0; }
  static Value inverse(const Value& v) { return Value(1) / v; }
  static void sub_mul(Value& acc, const Value& a, const Value& b) { acc -= a * b; }
  static Value mul(const Value& a, const Value& b) { return a * b; }
};

/// Arithmetic modulo the Mersenne prime 2^61 - 1.
struct ModPrimeField {
  using Value = std::uint64_t;
  static constexpr Value kPrime = (Value{1} << 61) - 1;
  static Value zero() { return 0; }
  static bool is_zero(Value v) { return v == 0; }
  static Value mul(Value a, Value b) {
    unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    Value lo = static_cast<Value>(p & kPrime);
    Value hi = static_cast<Value>(p >> 61);
    Value s = lo + hi;
    return s >= kPrime ? s - kPrime : s;
  }
  static Value add(Value a, Value b) {
    Value s = a + b;
    return s >= kPrime ? s - kPrime : s;
  }
  static Value sub(Value a, Value b) { return a >= b ? a - b : a + kPrime - b; }
  static void sub_mul(Value& acc, Value a, Value b) { acc = sub(acc, mul(a, b)); }
  static Value inverse(Value v);
  /// Image of a rational; throws when the denominator vanishes mod p.
  static Value from_rational(const Rational& q);
};

/// Reduced row echelon form of sparse rows over a field. Column indices are
/// 0..ncols-1; each row's pivot is its largest column, and pivot columns are
/// cleared from every other row, so reduction is a single pass.
template <class F>
class SparseEchelon {
public:
  using Value = typename F::Value;
  using Row = std::vector<std::pair<int, Value>>;  // sorted by column, no zeros

  explicit SparseEchelon(int ncols);

  int ncols() const { return ncols_; }
  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(int col) const { return pivot_of_col_[col] >= 0; }
  const std::vector<Row>& rows() const { return rows_; }

  /// Adds a row (sorted, distinct columns); returns false if it already lies
  /// in the span.
  bool insert(const Row& row);
  /// The unique remainder of `row` with no entries in pivot columns.
  Row reduce(const Row& row) const;

private:
  int ncols_;
  std::vector<int> pivot_of_col_;
  std::vector<Row> rows_;
  std::vector<std::vector<int>> col_rows_;  // rows that may hold a column
  std::vector<Value> scratch_;
  std::vector<char> touched_flag_;
};

extern template class SparseEchelon<RationalField>;
extern template class SparseEchelon<ModPrimeField>;

/// Rank of a dense rational matrix given as rows.
std::size_t matrix_rank(const std::vector<std::vector<Rational>>& rows);

}  // namespace hzhu
