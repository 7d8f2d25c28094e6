#include <json.hpp>
#include <sstream>

#include "hzhu/runner.hpp"
#include "hzhu/twisted.hpp"
#include "hzhu/zhu.hpp"

namespace hzhu {

namespace {

using nlohmann::json;

const std::array<ModuleFamily, 3> kDiscriminating{ModuleFamily::Hminus, ModuleFamily::Mlambda, ModuleFamily::Tminus};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> csv_split(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted) throw Error("unterminated quote in csv line: " + line);
  out.push_back(cur);
  return out;
}

json action_json(const TopLevelAction& v) {
  switch (v.kind()) {
    case TopLevelAction::Kind::Scalar:
      return to_string(v.scalar());
    case TopLevelAction::Kind::Poly:
      return v.poly().to_string();
    case TopLevelAction::Kind::Matrix: {
      json rows = json::array();
      const RMatrix& m = v.matrix();
      for (int i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.size(); ++j) row.push_back(to_string(m.at(i, j)));
        rows.push_back(row);
      }
      return rows;
    }
  }
  return nullptr;
}

TopLevelAction action_from_json(ModuleFamily f, const json& j) {
  if (j.is_array()) {
    RMatrix m(static_cast<int>(j.size()));
    for (int i = 0; i < m.size(); ++i) {
      if (!j[i].is_array() || static_cast<int>(j[i].size()) != m.size()) throw Error("matrix is not square");
      for (int k = 0; k < m.size(); ++k) m.at(i, k) = parse_rational(j[i][k].get<std::string>());
    }
    if (TopLevelAction::kind_of(f) != TopLevelAction::Kind::Matrix) throw Error("matrix value on " + to_string(f));
    return m;
  }
  return parse_action(f, j.get<std::string>());
}

}  // namespace

std::vector<TableRow> compute_tables(Rank rank) {
  std::vector<TableRow> rows;
  auto add = [&](int table, const std::string& name, const FockVector& v, const auto& families) {
    for (ModuleFamily f : families) rows.push_back({table, name, f, evaluate(v, f, rank)});
  };
  if (rank.ell() >= 2) {
    for (int m = 1; m <= 5; ++m)
      add(1, "S(1,1;2," + std::to_string(m) + ")", named_S(rank, 1, 1, 2, m), kDiscriminating);
    add(2, "Eu(1,2)", named_Eu(rank, 1, 2), kDiscriminating);
    add(2, "EuBar(2,1)", named_EuBar(rank, 2, 1), kDiscriminating);
    add(2, "Et(1,2)", named_Et(rank, 1, 2), kDiscriminating);
    add(2, "EtBar(2,1)", named_EtBar(rank, 2, 1), kDiscriminating);
    add(2, "Lam(1,2)", named_Lam(rank, 1, 2), kDiscriminating);
  }
  add(3, "w1", named_omega(rank, 1), all_families());
  add(3, "J1", named_J(rank, 1), all_families());
  return rows;
}

std::string emit_tables(Rank rank, const std::string& format) { return emit_tables(compute_tables(rank), format); }

std::string emit_tables(const std::vector<TableRow>& rows, const std::string& format) {
  if (format == "csv") {
    std::string out = "table,element,family,value\n";
    for (const auto& r : rows) {
      out += std::to_string(r.table) + "," + csv_field(r.element) + "," + to_string(r.family) + "," +
             csv_field(r.value.to_string()) + "\n";
    }
    return out;
  }
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"table", r.table}, {"element", r.element}, {"family", to_string(r.family)},
                     {"value", action_json(r.value)}});
    }
    return arr.dump(2) + "\n";
  }
  throw Error("unknown table format '" + format + "'");
}

std::vector<TableRow> parse_tables(const std::string& text, const std::string& format) {
  std::vector<TableRow> rows;
  auto family = [](const std::string& s) {
    auto f = parse_family(s);
    if (!f) throw Error("unknown family '" + s + "'");
    return *f;
  };
  if (format == "csv") {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "table,element,family,value") throw Error("missing csv header");
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      auto f = csv_split(line);
      if (f.size() != 4) throw Error("expected 4 csv fields: " + line);
      ModuleFamily fam = family(f[2]);
      rows.push_back({std::stoi(f[0]), f[1], fam, parse_action(fam, f[3])});
    }
    return rows;
  }
  if (format == "json") {
    json arr = json::parse(text);
    for (const auto& r : arr) {
      ModuleFamily fam = family(r.at("family").get<std::string>());
      rows.push_back({r.at("table").get<int>(), r.at("element").get<std::string>(), fam,
                      action_from_json(fam, r.at("value"))});
    }
    return rows;
  }
  throw Error("unknown table format '" + format + "'");
}

std::string emit_delta_table(int degree) {
  if (degree < 2) throw Error("degree must be at least 2");
  const DeltaTable& t = shared_delta_table(degree);
  std::string out;
  for (const auto& [mn, c] : t.entries) {
    if (mn.first + mn.second > degree) continue;
    out += std::to_string(mn.first) + " " + std::to_string(mn.second) + " " + to_string(c) + "\n";
  }
  return out;
}

}  // namespace hzhu
