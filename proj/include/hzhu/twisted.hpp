#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <utility>

#include "hzhu/fock.hpp"

namespace hzhu {

/// Coefficients c_mn (m, n >= 1, m + n <= max_degree) of
/// -log((sqrt(1+x) + sqrt(1+y)) / 2).
struct DeltaTable {
  int max_degree = 0;
  std::map<std::pair<int, int>, Rational> entries;

  /// c_mn, zero outside the stored range.
  Rational at(int m, int n) const;
  bool is_symmetric() const;
};

DeltaTable delta_coefficients(int max_degree);

/// Plain-text persistence, one "m n p/q" line per entry.
void save_delta_table(const DeltaTable& t, const std::filesystem::path& file);
/// Reads and validates (symmetry, range); nullopt if absent or malformed.
std::optional<DeltaTable> load_delta_table(const std::filesystem::path& file);

/// Process-wide table covering at least `min_degree`. Computed once per
/// degree request, read through the cache directory when one is configured
/// (see cache_directory()).
const DeltaTable& shared_delta_table(int min_degree);

/// e^{Delta_z} v split by z-exponent: bucket k holds the terms of z^k.
using LaurentBucket = std::map<int, FockVector>;

/// Requires table.max_degree >= weight of every component of v.
LaurentBucket apply_delta(const FockVector& v, const DeltaTable& table);

/// Component m of Y_theta(v, z) = W_theta(e^{Delta_z} v, z) on a twisted
/// target. v must be even.
FockVector twisted_mode_operator(const FockVector& v, int m, const FockVector& target, const DeltaTable& table);

/// o_theta(v) = Y_theta component wt v - 1, summed over homogeneous parts.
FockVector twisted_zero_mode(const FockVector& v, const FockVector& target, const DeltaTable& table);
/// Same with the shared table sized to v.
FockVector twisted_zero_mode(const FockVector& v, const FockVector& target);

/// Cache directory from HZHU_CACHE_DIR, if set and non-empty.
std::optional<std::filesystem::path> cache_directory();

}  // namespace hzhu
