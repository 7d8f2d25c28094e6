#include "hzhu/echelon.hpp"

#include <algorithm>
#include <map>

namespace hzhu {

ModPrimeField::Value ModPrimeField::inverse(Value v) {
  if (v == 0) throw Error("inverse of zero");
  Value result = 1;
  Value base = v;
  Value e = kPrime - 2;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

ModPrimeField::Value ModPrimeField::from_rational(const Rational& q) {
  static const Integer p(std::to_string(kPrime));
  Integer num = q.get_num() % p;
  if (num < 0) num += p;
  Integer den = q.get_den() % p;
  if (den == 0) throw Error("denominator divisible by the working prime");
  auto to_u64 = [](const Integer& z) {
    // Values are below 2^61, so two 32-bit halves suffice.
    Integer hi = z >> 32;
    Integer lo = z - (hi << 32);
    return (static_cast<Value>(hi.get_ui()) << 32) | static_cast<Value>(lo.get_ui());
  };
  return mul(to_u64(num), inverse(to_u64(den)));
}

template <class F>
SparseEchelon<F>::SparseEchelon(int ncols)
    : ncols_(ncols), pivot_of_col_(ncols, -1), col_rows_(ncols), scratch_(ncols, F::zero()), touched_flag_(ncols, 0) {}

namespace {

template <class F>
void row_sub_mul(typename SparseEchelon<F>::Row& target, const typename F::Value& factor,
                 const typename SparseEchelon<F>::Row& src, std::vector<int>* new_cols) {
  using Row = typename SparseEchelon<F>::Row;
  Row out;
  out.reserve(target.size() + src.size());
  auto it = target.begin();
  auto jt = src.begin();
  while (it != target.end() || jt != src.end()) {
    if (jt == src.end() || (it != target.end() && it->first < jt->first)) {
      out.push_back(std::move(*it));
      ++it;
    } else if (it == target.end() || jt->first < it->first) {
      typename F::Value v = F::zero();
      F::sub_mul(v, factor, jt->second);
      if (!F::is_zero(v)) {
        out.emplace_back(jt->first, std::move(v));
        if (new_cols) new_cols->push_back(jt->first);
      }
      ++jt;
    } else {
      typename F::Value v = std::move(it->second);
      F::sub_mul(v, factor, jt->second);
      if (!F::is_zero(v)) out.emplace_back(it->first, std::move(v));
      ++it;
      ++jt;
    }
  }
  target = std::move(out);
}

template <class F>
const typename F::Value* find_col(const typename SparseEchelon<F>::Row& row, int col) {
  auto it = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, int c) { return e.first < c; });
  if (it == row.end() || it->first != col) return nullptr;
  return &it->second;
}

}  // namespace

template <class F>
bool SparseEchelon<F>::insert(const Row& row) {
  std::vector<int> touched;
  auto touch = [&](int c) {
    if (!touched_flag_[c]) {
      touched_flag_[c] = 1;
      touched.push_back(c);
    }
  };
  for (const auto& [c, v] : row) {
    if (c < 0 || c >= ncols_) throw Error("column out of range");
    if (pivot_of_col_[c] >= 0) continue;
    touch(c);
    scratch_[c] = v;
  }
  for (const auto& [c, v] : row) {
    int r = pivot_of_col_[c];
    if (r < 0) continue;
    for (const auto& [pc, pv] : rows_[r]) {
      if (pc == c) continue;
      touch(pc);
      F::sub_mul(scratch_[pc], v, pv);
    }
  }
  std::sort(touched.begin(), touched.end());
  Row reduced;
  for (int c : touched) {
    if (!F::is_zero(scratch_[c])) reduced.emplace_back(c, std::move(scratch_[c]));
    scratch_[c] = F::zero();
    touched_flag_[c] = 0;
  }
  if (reduced.empty()) return false;

  const int lead = reduced.back().first;
  Value inv = F::inverse(reduced.back().second);
  for (auto& [c, v] : reduced) v = F::mul(v, inv);

  // Clear the new pivot column from the existing rows.
  std::vector<int> holders;
  holders.swap(col_rows_[lead]);
  for (int r : holders) {
    const Value* coeff = find_col<F>(rows_[r], lead);
    if (coeff == nullptr) continue;
    Value factor = *coeff;
    std::vector<int> new_cols;
    row_sub_mul<F>(rows_[r], factor, reduced, &new_cols);
    for (int c : new_cols) col_rows_[c].push_back(r);
  }

  const int idx = static_cast<int>(rows_.size());
  for (const auto& [c, v] : reduced) {
    if (c != lead) col_rows_[c].push_back(idx);
  }
  pivot_of_col_[lead] = idx;
  rows_.push_back(std::move(reduced));
  return true;
}

template <class F>
typename SparseEchelon<F>::Row SparseEchelon<F>::reduce(const Row& row) const {
  std::map<int, Value> acc;
  for (const auto& [c, v] : row) {
    if (c < 0 || c >= ncols_) throw Error("column out of range");
    if (pivot_of_col_[c] < 0) {
      if (!acc.try_emplace(c, v).second) throw Error("duplicate column in row");
    }
  }
  for (const auto& [c, v] : row) {
    int r = pivot_of_col_[c];
    if (r < 0) continue;
    for (const auto& [pc, pv] : rows_[r]) {
      if (pc == c) continue;
      auto [it, inserted] = acc.try_emplace(pc, F::zero());
      F::sub_mul(it->second, v, pv);
    }
  }
  Row out;
  for (auto& [c, v] : acc) {
    if (!F::is_zero(v)) out.emplace_back(c, std::move(v));
  }
  return out;
}

template class SparseEchelon<RationalField>;
template class SparseEchelon<ModPrimeField>;

std::size_t matrix_rank(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return 0;
  int ncols = static_cast<int>(rows.front().size());
  SparseEchelon<RationalField> e(ncols);
  for (const auto& r : rows) {
    SparseEchelon<RationalField>::Row sr;
    for (int c = 0; c < ncols; ++c) {
      if (sgn(r[c]) != 0) sr.emplace_back(c, r[c]);
    }
    e.insert(sr);
  }
  return e.rank();
}

}  // namespace hzhu
