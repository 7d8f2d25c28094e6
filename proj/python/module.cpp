#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hzhu/runner.hpp"
#include "hzhu/twisted.hpp"
#include "hzhu/zhu.hpp"

namespace py = pybind11;
using namespace hzhu;

namespace {

ModuleFamily family(const std::string& s) {
  auto f = parse_family(s);
  if (!f) throw Error("unknown family '" + s + "'");
  return *f;
}

RunConfig config(int rank, std::optional<int> max_weight, std::optional<int> slack) {
  RunConfig c;
  c.rank = Rank(rank);
  if (max_weight || slack) c.override_cutoffs = true;
  if (max_weight) c.max_weight = *max_weight;
  if (slack) c.slack = *slack;
  return c;
}

FockVector element(const std::string& text, int rank) {
  // named elements first, then linear combinations of monomials
  try {
    return named_element(text, Rank(rank)).realization;
  } catch (const Error&) {
    return parse_fock_vector(text);
  }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations in the Zhu algebra of the rank-l Heisenberg orbifold";
  py::register_exception<Error>(m, "HzhuError", PyExc_ValueError);

  m.def(
      "delta_coefficients",
      [](int degree) {
        std::map<std::pair<int, int>, std::string> out;
        for (const auto& [mn, c] : delta_coefficients(degree).entries) out[mn] = to_string(c);
        return out;
      },
      py::arg("degree"), "c_mn as 'p/q' strings, keyed by (m, n)");

  m.def(
      "evaluate",
      [](const std::string& elem, const std::string& fam, int rank) {
        return evaluate(element(elem, rank), family(fam), Rank(rank)).to_string();
      },
      py::arg("element"), py::arg("family"), py::arg("rank"), "top-level action as text");

  m.def(
      "star",
      [](const std::string& u, const std::string& v, int rank) {
        return to_string(star(element(u, rank), element(v, rank)));
      },
      py::arg("u"), py::arg("v"), py::arg("rank") = 2);

  m.def(
      "circ",
      [](const std::string& u, const std::string& v, int n, int rank) {
        return to_string(circ_n(element(u, rank), element(v, rank), n));
      },
      py::arg("u"), py::arg("v"), py::arg("n") = 0, py::arg("rank") = 2);

  m.def(
      "is_equiv",
      [](const std::string& x, const std::string& y, int rank, int max_weight, int slack) {
        OSpanEchelon e(Rank(rank), max_weight, slack);
        return is_equiv(element(x, rank), element(y, rank), e) == Verdict::ProvedEqual;
      },
      py::arg("x"), py::arg("y"), py::arg("rank") = 2, py::arg("max_weight") = 8, py::arg("slack") = 2,
      "True when x - y is certified to lie in O at the cutoff");

  m.def(
      "independence_rank",
      [](const std::vector<std::string>& elems, int rank) {
        std::vector<FockVector> v;
        for (const auto& e : elems) v.push_back(element(e, rank));
        return independence_rank(v, Rank(rank));
      },
      py::arg("elements"), py::arg("rank"));

  m.def(
      "run_script",
      [](const std::string& text, int rank, std::optional<int> max_weight, std::optional<int> slack) {
        RunConfig c = config(rank, max_weight, slack);
        return report_json(run_script(parse_script(text, c.rank), c), false);
      },
      py::arg("text"), py::arg("rank") = 2, py::arg("max_weight") = py::none(), py::arg("slack") = py::none(),
      "JSON report without timing fields");

  m.def(
      "run_suite",
      [](const std::string& name, int rank) {
        RunConfig c = config(rank, std::nullopt, std::nullopt);
        return report_json(run_suite(builtin_suite(name, c.rank), c), false);
      },
      py::arg("name"), py::arg("rank") = 2);

  m.def("suite_names", &suite_names);

  m.def(
      "tables", [](int rank, const std::string& format) { return emit_tables(Rank(rank), format); },
      py::arg("rank"), py::arg("format") = "csv");

  m.def("circle_reduction_coefficients", [] {
    std::vector<std::string> out;
    for (const auto& q : circle_reduction_coefficients()) out.push_back(to_string(q));
    return out;
  });
}
