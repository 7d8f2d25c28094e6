#include "hzhu/twisted.hpp"

#include <cstdlib>
#include <fstream>
#include <memory>
#include <mutex>
#include <sstream>
#include <vector>

#include "hzhu/series.hpp"
#include "hzhu/vertex.hpp"

namespace hzhu {

Rational DeltaTable::at(int m, int n) const {
  auto it = entries.find({m, n});
  return it == entries.end() ? Rational(0) : it->second;
}

bool DeltaTable::is_symmetric() const {
  for (const auto& [k, c] : entries) {
    if (at(k.second, k.first) != c) return false;
  }
  return true;
}

DeltaTable delta_coefficients(int max_degree) {
  if (max_degree < 2) throw Error("delta table degree must be at least 2");
  const Rational half(1, 2);
  BivariateSeries s = BivariateSeries::binomial_series(max_degree, half, false);
  s += BivariateSeries::binomial_series(max_degree, half, true);
  s *= half;
  s -= BivariateSeries::constant(max_degree, 1);
  BivariateSeries g = BivariateSeries::log1p(s);
  g *= Rational(-1);
  DeltaTable t;
  t.max_degree = max_degree;
  for (int m = 1; m < max_degree; ++m) {
    for (int n = 1; m + n <= max_degree; ++n) {
      if (sgn(g.at(m, n)) != 0) t.entries[{m, n}] = g.at(m, n);
    }
  }
  return t;
}

void save_delta_table(const DeltaTable& t, const std::filesystem::path& file) {
  std::filesystem::create_directories(file.parent_path());
  auto tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw Error("cannot write " + tmp.string());
    out << "# delta-table degree " << t.max_degree << "\n";
    for (const auto& [k, c] : t.entries) out << k.first << ' ' << k.second << ' ' << to_string(c) << '\n';
  }
  std::filesystem::rename(tmp, file);
}

std::optional<DeltaTable> load_delta_table(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  DeltaTable t;
  std::string line;
  if (!std::getline(in, line)) return std::nullopt;
  std::istringstream header(line);
  std::string hash, word1, word2;
  header >> hash >> word1 >> word2 >> t.max_degree;
  if (hash != "#" || word1 != "delta-table" || !header || t.max_degree < 2) return std::nullopt;
  try {
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      std::istringstream ls(line);
      int m = 0, n = 0;
      std::string c;
      if (!(ls >> m >> n >> c) || m < 1 || n < 1 || m + n > t.max_degree) return std::nullopt;
      t.entries[{m, n}] = parse_rational(c);
    }
  } catch (const Error&) {
    return std::nullopt;
  }
  if (!t.is_symmetric()) return std::nullopt;
  return t;
}

std::optional<std::filesystem::path> cache_directory() {
  const char* dir = std::getenv("HZHU_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return std::filesystem::path(dir);
}

const DeltaTable& shared_delta_table(int min_degree) {
  static std::mutex mu;
  static std::vector<std::unique_ptr<DeltaTable>> tables;
  std::lock_guard lock(mu);
  for (const auto& t : tables) {
    if (t->max_degree >= min_degree) return *t;
  }
  // Grow in steps so that a sequence of requests does not recompute often.
  int degree = std::max(16, min_degree);
  std::optional<DeltaTable> loaded;
  auto dir = cache_directory();
  std::filesystem::path file;
  if (dir) {
    file = *dir / ("delta-" + std::to_string(degree) + ".txt");
    loaded = load_delta_table(file);
  }
  if (!loaded) {
    loaded = delta_coefficients(degree);
    if (dir) {
      try {
        save_delta_table(*loaded, file);
      } catch (const std::exception&) {
        // The cache is an optimisation only.
      }
    }
  }
  tables.push_back(std::make_unique<DeltaTable>(std::move(*loaded)));
  return *tables.back();
}

namespace {

/// One application of Delta (without the z power) to a monomial; the
/// z-exponent drop is the total annihilated weight.
void delta_once(const Monomial& mono, const Rational& coeff, const DeltaTable& table,
                std::map<int, FockVector>& out, int base_exponent) {
  const auto& modes = mono.modes();
  // Distinct modes, each with its multiplicity.
  std::vector<std::pair<Mode, int>> distinct;
  for (const auto& md : modes) {
    if (!distinct.empty() && distinct.back().first == md) {
      ++distinct.back().second;
    } else {
      distinct.emplace_back(md, 1);
    }
  }
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    for (std::size_t j = 0; j < distinct.size(); ++j) {
      const auto& [mi, ci] = distinct[i];
      const auto& [mj, cj] = distinct[j];
      if (mi.gen != mj.gen) continue;
      if (i == j && ci < 2) continue;
      int m = -mi.twice / 2;
      int n = -mj.twice / 2;
      Rational c = table.at(m, n);
      if (sgn(c) == 0) continue;
      // h(m) h(n): h(n) acts first.
      long first = cj;
      long second = i == j ? ci - 1 : ci;
      Rational factor = c * Rational(n * first) * Rational(m * second) * coeff;
      Monomial reduced = mono.without(mj).without(mi);
      int exponent = base_exponent - m - n;
      auto it = out.try_emplace(exponent, FockVector(Sector::Untwisted)).first;
      it->second.add_term(reduced, factor);
    }
  }
}

}  // namespace

LaurentBucket apply_delta(const FockVector& v, const DeltaTable& table) {
  if (!v.is_zero() && v.sector() != Sector::Untwisted) throw Error("apply_delta needs an untwisted state");
  HalfInteger top = max_weight(v);
  if (top.twice > 2 * table.max_degree) {
    throw Error("delta table degree " + std::to_string(table.max_degree) + " is below the state weight " +
                to_string(top));
  }
  LaurentBucket result;
  if (v.is_zero()) return result;
  result[0] = v;
  LaurentBucket current = result;
  for (int k = 1; !current.empty(); ++k) {
    LaurentBucket next;
    for (const auto& [e, w] : current) {
      for (const auto& [m, c] : w.terms()) delta_once(m, c, table, next, e);
    }
    LaurentBucket cleaned;
    for (auto& [e, w] : next) {
      if (w.is_zero()) continue;
      w *= Rational(1, k);
      auto it = result.try_emplace(e, FockVector(Sector::Untwisted)).first;
      it->second += w;
      cleaned.emplace(e, std::move(w));
    }
    current = std::move(cleaned);
  }
  for (auto it = result.begin(); it != result.end();) {
    it = it->second.is_zero() ? result.erase(it) : std::next(it);
  }
  return result;
}

FockVector twisted_mode_operator(const FockVector& v, int m, const FockVector& target, const DeltaTable& table) {
  if (!is_even(v)) throw Error("twisted operators need an even source state");
  if (!target.is_zero() && target.sector() != Sector::Twisted) throw Error("target must be twisted");
  FockVector out(Sector::Twisted);
  for (const auto& [e, w] : apply_delta(v, table)) {
    // z^e W(w, z) contributes its component m + e to the z^{-m-1} coefficient.
    out += detail::normal_ordered_component<Rational>(w, m + e, target, nullptr);
  }
  return out;
}

FockVector twisted_zero_mode(const FockVector& v, const FockVector& target, const DeltaTable& table) {
  FockVector out(Sector::Twisted);
  for (const auto& [w, part] : homogeneous_components(v)) {
    out += twisted_mode_operator(part, w.twice / 2 - 1, target, table);
  }
  return out;
}

FockVector twisted_zero_mode(const FockVector& v, const FockVector& target) {
  int need = std::max(2, max_weight(v).twice / 2);
  return twisted_zero_mode(v, target, shared_delta_table(need));
}

}  // namespace hzhu
