#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hzhu/echelon.hpp"
#include "hzhu/fock.hpp"

namespace hzhu {

/// u * v = sum_i C(wt u, i) u_{i-1} v, linear in u over homogeneous parts.
FockVector star(const FockVector& u, const FockVector& v);

/// sum_i C(wt u, i) u_{i-n-2} v; n = 0 is the circle product.
FockVector circ_n(const FockVector& u, const FockVector& v, int n);

/// u raised to the k-th star power (k >= 0; the 0-th power is the vacuum).
FockVector star_power(const FockVector& u, int k);

// Named generators. Indices are 1-based and checked against the rank.
FockVector named_omega(Rank rank, int a);
/// h_a(-1)^4 - 2 h_a(-3)h_a(-1) + 3/2 h_a(-2)^2.
FockVector named_J(Rank rank, int a);
/// J_a + omega_a - 4 omega_a * omega_a.
FockVector named_H(Rank rank, int a);
/// h_a(-m) h_b(-n); a = b is allowed.
FockVector named_S(Rank rank, int a, int m, int b, int n);
/// Star product of S over consecutive index pairs; indices distinct, even count.
FockVector named_S_alpha(Rank rank, const std::vector<int>& alpha);
FockVector named_Eu(Rank rank, int a, int b);
FockVector named_Et(Rank rank, int a, int b);
FockVector named_Lam(Rank rank, int a, int b);
/// The barred variants; EuBar(b, a) is built from the S_ab(1, m).
FockVector named_EuBar(Rank rank, int b, int a);
FockVector named_EtBar(Rank rank, int b, int a);

struct NamedElement {
  std::string name;
  FockVector realization;
};

/// Parses "one", "omega(1)", "J(2)", "H(1)", "S(1,1;2,3)", "S_alpha(1,2,3,4)",
/// "Eu(1,2)", "Et(1,2)", "Lam(1,2)", "EuBar(2,1)", "EtBar(2,1)".
NamedElement named_element(std::string_view name, Rank rank);

/// Which elements u enter the circle rows circ_n(u, v, n).
struct OSpanPolicy {
  /// 2: u = h_a(-1)h_b(-k) only; larger values add every even monomial with
  /// at most this many modes.
  int max_left_modes = 2;
  std::vector<FockVector> extra_left;
  /// Extra vectors known to lie in O, added as rows.
  std::vector<FockVector> extra_rows;

  std::string fingerprint() const;
};

/// Where a generating row came from.
struct RowSource {
  std::string left;
  std::string right;
  int n = 0;
};

struct BlockStats {
  std::uint64_t mask = 0;
  std::size_t columns = 0;
  std::size_t candidates = 0;
  std::size_t rank = 0;
  double seconds = 0;
  bool from_cache = false;
};

/// Span of circle elements whose top weight is at most max_weight + slack,
/// in reduced echelon form. Built per sector (the parity of each h_a count),
/// on first use; every row is a genuine element of O(H+).
class OSpanEchelon {
public:
  OSpanEchelon(Rank rank, int max_weight, int slack, OSpanPolicy policy = {});
  ~OSpanEchelon();
  OSpanEchelon(const OSpanEchelon&) = delete;
  OSpanEchelon& operator=(const OSpanEchelon&) = delete;

  Rank rank() const { return rank_; }
  int max_weight() const { return max_weight_; }
  int slack() const { return slack_; }
  const OSpanPolicy& policy() const { return policy_; }

  /// Normal form of x modulo the span. Throws when x has components above
  /// max_weight or odd parity.
  FockVector reduce(const FockVector& x) const;

  /// Sources of the independent rows of a sector block.
  std::vector<RowSource> provenance(std::uint64_t mask) const;
  std::vector<BlockStats> stats() const;
  std::size_t cache_hits() const;

  struct Block;

private:
  const Block& block(std::uint64_t mask) const;
  std::unique_ptr<Block> build_block(std::uint64_t mask) const;

  Rank rank_;
  int max_weight_;
  int slack_;
  OSpanPolicy policy_;
  mutable std::mutex mu_;
  mutable std::map<std::uint64_t, std::unique_ptr<Block>> blocks_;
  mutable std::size_t cache_hits_ = 0;
};

std::unique_ptr<OSpanEchelon> build_ospan(Rank rank, int max_weight, int slack,
                                          const std::vector<FockVector>& extra_generators = {});

enum class Verdict { ProvedEqual, Unknown };

/// ProvedEqual iff x - y reduces to zero.
Verdict is_equiv(const FockVector& x, const FockVector& y, const OSpanEchelon& e);

/// Coordinates c with x - sum c_j basis_j in the span of `e`, if they exist
/// and the reduced basis is independent; nullopt otherwise.
std::optional<std::vector<Rational>> express_modulo(const FockVector& x, const std::vector<FockVector>& basis,
                                                    const OSpanEchelon& e);

/// Same against an explicit list of relation vectors instead of O.
std::optional<std::vector<Rational>> express_modulo_rows(const FockVector& x, const std::vector<FockVector>& basis,
                                                         const std::vector<FockVector>& relations);

}  // namespace hzhu
