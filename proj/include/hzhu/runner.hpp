#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hzhu/eval.hpp"
#include "hzhu/script.hpp"

namespace hzhu {

struct RunConfig {
  Rank rank{2};
  int max_weight = 8;
  int slack = 2;
  /// When set, max_weight and slack replace the per-statement options.
  bool override_cutoffs = false;
  /// Statements asking for a larger cutoff are reported as errors.
  int weight_cap = 16;
};

enum class Status { Proved, Disproved, Unknown, Error };
std::string to_string(Status s);

struct StatementResult {
  int line = 0;
  std::string kind;  // assert_equiv, assert_eval, assert_rank, assert_zero_eval, check
  std::string text;
  Status status = Status::Unknown;
  Expectation expect = Expectation::Proved;
  std::optional<Witness> witness;
  std::string detail;
  int rank = 0;
  int max_weight = 0;
  int slack = 0;
  double seconds = 0;

  bool passed() const;
};

struct Report {
  std::string name;
  RunConfig config;
  std::vector<StatementResult> results;
  std::size_t echelons_built = 0;
  std::size_t echelon_cache_hits = 0;
  double seconds = 0;

  bool passed() const;
  std::size_t count(Status s) const;
};

/// Runs parsed statements. AssertEquiv tries an evaluation disproof first,
/// then an O-span certificate; the verdict is Unknown when neither applies.
Report run_script(const std::vector<Statement>& script, const RunConfig& config, const std::string& name = "script");

/// JSON report; timing fields are left out when `timing` is false so that
/// reports of identical runs compare byte for byte.
std::string report_json(const Report& r, bool timing = true);
std::string report_text(const Report& r, bool timing = true);

/// A statement checked by native code rather than the script language.
struct NativeCheck {
  std::string name;
  std::function<StatementResult()> run;
};

struct Suite {
  std::string name;
  std::string script;
  std::vector<NativeCheck> checks;
};

const std::vector<std::string>& suite_names();
/// Throws on an unknown name. "all" concatenates the others.
Suite builtin_suite(const std::string& name, Rank rank);
Report run_suite(const Suite& suite, const RunConfig& config);

/// Coefficients of circ(S_ab(1,1), h_a(-1)^4) in S_ab(1,m), m = 1..6, modulo
/// the relations used in the reduction.
std::vector<Rational> circle_reduction_coefficients();

// ---- tables ----

struct TableRow {
  int table = 0;
  std::string element;  // script syntax
  ModuleFamily family = ModuleFamily::Hplus;
  TopLevelAction value;
  friend bool operator==(const TableRow&, const TableRow&) = default;
};

/// Top-level actions with a = 1, b = 2: table 1 holds S_12(1,m), table 2 the
/// matrix-unit generators, table 3 w_1 and J_1. Rank 1 has only table 3.
std::vector<TableRow> compute_tables(Rank rank);
std::string emit_tables(Rank rank, const std::string& format);
std::string emit_tables(const std::vector<TableRow>& rows, const std::string& format);
std::vector<TableRow> parse_tables(const std::string& text, const std::string& format);

/// Text of "delta-table": one "m n c_mn" line per entry.
std::string emit_delta_table(int degree);

}  // namespace hzhu
