#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hzhu/runner.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw hzhu::Error("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int emit(const hzhu::Report& r, const std::string& format, bool timing) {
  std::cout << (format == "json" ? hzhu::report_json(r, timing) : hzhu::report_text(r, timing));
  return r.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the Zhu algebra of the rank-l Heisenberg orbifold.\n"
               "Cache directory: HZHU_CACHE_DIR"};
  app.require_subcommand(1);

  hzhu::RunConfig cfg;
  int rank = 2;
  std::string format = "text";
  bool no_timing = false;
  std::optional<int> max_weight, slack;

  auto run_opts = [&](CLI::App* sub) {
    sub->add_option("--rank", rank, "number of oscillators")->check(CLI::Range(1, 8));
    sub->add_option("--max-weight", max_weight, "O-span weight cutoff (overrides statement options)");
    sub->add_option("--slack", slack, "extra weight allowed in circle rows");
    sub->add_option("--weight-cap", cfg.weight_cap, "largest cutoff a statement may request");
    sub->add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}));
    sub->add_flag("--no-timing", no_timing, "omit timing fields");
  };

  std::string script_path;
  auto* verify = app.add_subcommand("verify", "run a relation script");
  verify->add_option("script", script_path, "script file, one statement per line")->required();
  run_opts(verify);

  std::string suite_name;
  auto* suite = app.add_subcommand("suite", "run a built-in suite");
  suite->add_option("name", suite_name, "suite name")->required()->check(CLI::IsMember(hzhu::suite_names()));
  run_opts(suite);

  std::string table_format = "csv";
  int table_rank = 2;
  auto* tables = app.add_subcommand("tables", "print the top-level actions of the tabulated elements");
  tables->add_option("--rank", table_rank, "number of oscillators")->check(CLI::Range(1, 8));
  tables->add_option("--format", table_format, "output format")->check(CLI::IsMember({"csv", "json"}));

  int degree = 16;
  auto* delta = app.add_subcommand("delta-table", "print the coefficients c_mn with m + n <= D");
  delta->add_option("--degree", degree, "total degree D")->check(CLI::Range(2, 200));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  auto configure = [&] {
    cfg.rank = hzhu::Rank(rank);
    if (max_weight || slack) cfg.override_cutoffs = true;
    if (max_weight) cfg.max_weight = *max_weight;
    if (slack) cfg.slack = *slack;
  };

  try {
    if (verify->parsed()) {
      configure();
      auto stmts = hzhu::parse_script(read_file(script_path), cfg.rank);
      return emit(hzhu::run_script(stmts, cfg, script_path), format, !no_timing);
    }
    if (suite->parsed()) {
      configure();
      return emit(hzhu::run_suite(hzhu::builtin_suite(suite_name, cfg.rank), cfg), format, !no_timing);
    }
    if (tables->parsed()) {
      std::cout << hzhu::emit_tables(hzhu::Rank(table_rank), table_format);
      return 0;
    }
    if (delta->parsed()) {
      std::cout << hzhu::emit_delta_table(degree);
      return 0;
    }
  } catch (const hzhu::ScriptError& e) {
    std::cerr << script_path << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
