#include "hzhu/zhu.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "hzhu/twisted.hpp"
#include "hzhu/vertex.hpp"

namespace hzhu {

namespace {

int integral_weight(HalfInteger w) {
  if (!w.is_integer()) throw Error("state has half-integral weight");
  return w.twice / 2;
}

void check_untwisted(const FockVector& v) {
  if (!v.is_zero() && v.sector() != Sector::Untwisted) throw Error("Zhu products need untwisted states");
}

}  // namespace

FockVector star(const FockVector& u, const FockVector& v) {
  check_untwisted(u);
  check_untwisted(v);
  FockVector out;
  for (const auto& [w, part] : homogeneous_components(u)) {
    int wt = integral_weight(w);
    for (int i = 0; i <= wt; ++i) {
      FockVector t = mode_operator<Rational>(part, i - 1, v);
      t *= binomial(static_cast<long>(wt), i);
      out += t;
    }
  }
  return out;
}

FockVector circ_n(const FockVector& u, const FockVector& v, int n) {
  if (n < 0) throw Error("circle index must be nonnegative");
  check_untwisted(u);
  check_untwisted(v);
  FockVector out;
  for (const auto& [w, part] : homogeneous_components(u)) {
    int wt = integral_weight(w);
    for (int i = 0; i <= wt; ++i) {
      FockVector t = mode_operator<Rational>(part, i - n - 2, v);
      t *= binomial(static_cast<long>(wt), i);
      out += t;
    }
  }
  return out;
}

FockVector star_power(const FockVector& u, int k) {
  if (k < 0) throw Error("negative star power");
  FockVector out = FockVector::vacuum();
  for (int i = 0; i < k; ++i) out = star(out, u);
  return out;
}

namespace {

void check_index(Rank rank, int a) {
  if (a < 1 || a > rank.ell()) throw Error("generator index " + std::to_string(a) + " out of range 1.." +
                                           std::to_string(rank.ell()));
}

void check_pair(Rank rank, int a, int b) {
  check_index(rank, a);
  check_index(rank, b);
  if (a == b) throw Error("indices must be distinct");
}

FockVector mono(std::initializer_list<std::pair<int, int>> modes, const Rational& c = 1) {
  std::vector<Mode> v;
  for (auto [g, n] : modes) v.push_back(Mode::integral(g, -n));
  std::sort(v.begin(), v.end());
  return FockVector(Sector::Untwisted, Monomial(std::move(v)), c);
}

FockVector combo_S1(Rank rank, int a, int b, std::initializer_list<int> coeffs, const Rational& overall) {
  FockVector out;
  int m = 1;
  for (int c : coeffs) {
    if (c != 0) out += Rational(c) * named_S(rank, a, 1, b, m);
    ++m;
  }
  out *= overall;
  return out;
}

}  // namespace

FockVector named_omega(Rank rank, int a) {
  check_index(rank, a);
  return omega(a);
}

FockVector named_J(Rank rank, int a) {
  check_index(rank, a);
  return mono({{a, 1}, {a, 1}, {a, 1}, {a, 1}}) + mono({{a, 3}, {a, 1}}, -2) + mono({{a, 2}, {a, 2}}, Rational(3, 2));
}

FockVector named_H(Rank rank, int a) {
  FockVector w = named_omega(rank, a);
  FockVector out = named_J(rank, a) + w;
  out -= Rational(4) * star(w, w);
  return out;
}

FockVector named_S(Rank rank, int a, int m, int b, int n) {
  check_index(rank, a);
  check_index(rank, b);
  if (m < 1 || n < 1) throw Error("S needs positive mode numbers");
  return mono({{a, m}, {b, n}});
}

FockVector named_S_alpha(Rank rank, const std::vector<int>& alpha) {
  if (alpha.empty() || alpha.size() % 2 != 0) throw Error("S_alpha needs a nonempty even index list");
  std::set<int> seen(alpha.begin(), alpha.end());
  if (seen.size() != alpha.size()) throw Error("S_alpha indices must be distinct");
  FockVector out = FockVector::vacuum();
  for (std::size_t i = 0; i < alpha.size(); i += 2) out = star(out, named_S(rank, alpha[i], 1, alpha[i + 1], 1));
  return out;
}

FockVector named_Eu(Rank rank, int a, int b) {
  check_pair(rank, a, b);
  return combo_S1(rank, a, b, {0, 5, 25, 36, 16}, 1);
}

FockVector named_EuBar(Rank rank, int b, int a) {
  check_pair(rank, a, b);
  return combo_S1(rank, a, b, {1, 14, 41, 44, 16}, 1);
}

FockVector named_Et(Rank rank, int a, int b) {
  check_pair(rank, a, b);
  return combo_S1(rank, a, b, {0, 3, 14, 19, 8}, -16);
}

FockVector named_EtBar(Rank rank, int b, int a) {
  check_pair(rank, a, b);
  return combo_S1(rank, a, b, {0, 5, 18, 21, 8}, -16);
}

FockVector named_Lam(Rank rank, int a, int b) {
  check_pair(rank, a, b);
  return combo_S1(rank, a, b, {0, 45, 190, 240, 96}, 1);
}

namespace {

std::vector<int> parse_int_list(std::string_view s, char sep) {
  std::vector<int> out;
  std::string cur;
  for (char c : s) {
    if (c == sep || c == ',' || c == ';') {
      if (cur.empty()) throw Error("empty index");
      out.push_back(std::stoi(cur));
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw Error("bad index list");
      cur += c;
    }
  }
  if (cur.empty()) throw Error("empty index");
  out.push_back(std::stoi(cur));
  return out;
}

}  // namespace

NamedElement named_element(std::string_view name, Rank rank) {
  std::string text(name);
  if (text == "one") return {text, FockVector::vacuum()};
  auto open = text.find('(');
  if (open == std::string::npos || text.back() != ')') throw Error("unknown element: " + text);
  std::string head = text.substr(0, open);
  std::string args = text.substr(open + 1, text.size() - open - 2);
  auto ints = parse_int_list(args, ',');
  auto need = [&](std::size_t k) {
    if (ints.size() != k) throw Error("wrong number of indices for " + head);
  };
  FockVector v;
  if (head == "omega" || head == "w") {
    need(1);
    v = named_omega(rank, ints[0]);
  } else if (head == "J") {
    need(1);
    v = named_J(rank, ints[0]);
  } else if (head == "H") {
    need(1);
    v = named_H(rank, ints[0]);
  } else if (head == "S") {
    need(4);
    v = named_S(rank, ints[0], ints[1], ints[2], ints[3]);
  } else if (head == "S_alpha") {
    v = named_S_alpha(rank, ints);
  } else if (head == "Eu") {
    need(2);
    v = named_Eu(rank, ints[0], ints[1]);
  } else if (head == "Et") {
    need(2);
    v = named_Et(rank, ints[0], ints[1]);
  } else if (head == "Lam") {
    need(2);
    v = named_Lam(rank, ints[0], ints[1]);
  } else if (head == "EuBar") {
    need(2);
    v = named_EuBar(rank, ints[0], ints[1]);
  } else if (head == "EtBar") {
    need(2);
    v = named_EtBar(rank, ints[0], ints[1]);
  } else {
    throw Error("unknown element: " + text);
  }
  return {text, std::move(v)};
}

std::string OSpanPolicy::fingerprint() const {
  std::string s = "modes=" + std::to_string(max_left_modes);
  for (const auto& v : extra_left) s += "|L:" + to_string(v);
  for (const auto& v : extra_rows) s += "|R:" + to_string(v);
  // FNV-1a, stable across platforms.
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct OSpanEchelon::Block {
  std::uint64_t mask = 0;
  std::vector<Monomial> columns;
  std::map<Monomial, int> index;
  std::unique_ptr<SparseEchelon<RationalField>> echelon;
  std::vector<RowSource> sources;
  BlockStats stats;
};

OSpanEchelon::OSpanEchelon(Rank rank, int max_weight, int slack, OSpanPolicy policy)
    : rank_(rank), max_weight_(max_weight), slack_(slack), policy_(std::move(policy)) {
  if (max_weight < 2) throw Error("max_weight must be at least 2");
  if (slack < 0) throw Error("slack must be nonnegative");
  if (policy_.max_left_modes < 2) throw Error("max_left_modes must be at least 2");
  for (const auto& v : policy_.extra_left) {
    if (!is_even(v)) throw Error("extra left generators must be even");
  }
}

OSpanEchelon::~OSpanEchelon() = default;

namespace {

constexpr const char* kCacheVersion = "hzhu-ospan-v1";

std::filesystem::path block_cache_file(const std::filesystem::path& dir, Rank rank, int w, int s,
                                       const std::string& fp, std::uint64_t mask) {
  std::ostringstream name;
  name << kCacheVersion << "-r" << rank.ell() << "-w" << w << "-s" << s << "-p" << fp << "-m" << mask << ".txt";
  return dir / name.str();
}

void save_block(const std::filesystem::path& file, const OSpanEchelon::Block& b) {
  std::filesystem::create_directories(file.parent_path());
  auto tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << kCacheVersion << "\n" << b.columns.size() << " " << b.echelon->rank() << "\n";
    for (const auto& m : b.columns) out << to_string(m) << "\n";
    for (std::size_t i = 0; i < b.echelon->rows().size(); ++i) {
      const auto& src = b.sources[i];
      out << src.left << "\t" << src.right << "\t" << src.n << "\n";
      const auto& row = b.echelon->rows()[i];
      out << row.size();
      for (const auto& [c, v] : row) out << " " << c << ":" << to_string(v);
      out << "\n";
    }
    out << "end\n";
  }
  std::filesystem::rename(tmp, file);
}

bool load_block(const std::filesystem::path& file, OSpanEchelon::Block& b) {
  std::ifstream in(file);
  if (!in) return false;
  try {
    std::string line;
    if (!std::getline(in, line) || line != kCacheVersion) return false;
    std::size_t ncols = 0, nrows = 0;
    if (!std::getline(in, line)) return false;
    std::istringstream(line) >> ncols >> nrows;
    if (ncols != b.columns.size()) return false;
    for (std::size_t i = 0; i < ncols; ++i) {
      if (!std::getline(in, line) || line != to_string(b.columns[i])) return false;
    }
    auto ech = std::make_unique<SparseEchelon<RationalField>>(static_cast<int>(ncols));
    std::vector<RowSource> sources;
    for (std::size_t i = 0; i < nrows; ++i) {
      RowSource src;
      if (!std::getline(in, line)) return false;
      auto t1 = line.find('\t');
      auto t2 = line.find('\t', t1 + 1);
      if (t1 == std::string::npos || t2 == std::string::npos) return false;
      src.left = line.substr(0, t1);
      src.right = line.substr(t1 + 1, t2 - t1 - 1);
      src.n = std::stoi(line.substr(t2 + 1));
      if (!std::getline(in, line)) return false;
      std::istringstream ls(line);
      std::size_t len = 0;
      ls >> len;
      SparseEchelon<RationalField>::Row row;
      for (std::size_t k = 0; k < len; ++k) {
        std::string tok;
        ls >> tok;
        auto colon = tok.find(':');
        if (colon == std::string::npos) return false;
        int c = std::stoi(tok.substr(0, colon));
        if (c < 0 || c >= static_cast<int>(ncols)) return false;
        if (!row.empty() && row.back().first >= c) return false;
        row.emplace_back(c, parse_rational(tok.substr(colon + 1)));
      }
      if (!ech->insert(row)) return false;
      sources.push_back(std::move(src));
    }
    if (!std::getline(in, line) || line != "end") return false;
    b.echelon = std::move(ech);
    b.sources = std::move(sources);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

std::unique_ptr<OSpanEchelon::Block> OSpanEchelon::build_block(std::uint64_t mask) const {
  auto start = std::chrono::steady_clock::now();
  auto b = std::make_unique<Block>();
  b->mask = mask;
  const int top = max_weight_ + slack_;

  // Even basis up to the top weight, grouped by sector.
  std::vector<std::vector<Monomial>> even_by_weight(top + 1);
  for (int w = 0; w <= top; ++w) even_by_weight[w] = basis(rank_, Sector::Untwisted, HalfInteger::from_integer(w), ParityFilter::Even);
  for (int w = 0; w <= top; ++w) {
    for (const auto& m : even_by_weight[w]) {
      if (m.sector_mask() == mask) {
        b->index.emplace(m, static_cast<int>(b->columns.size()));
        b->columns.push_back(m);
      }
    }
  }
  const int ncols = static_cast<int>(b->columns.size());

  auto dir = cache_directory();
  std::filesystem::path file;
  if (dir) {
    file = block_cache_file(*dir, rank_, max_weight_, slack_, policy_.fingerprint(), mask);
    if (load_block(file, *b)) {
      b->stats = {mask, b->columns.size(), 0, b->echelon->rank(), 0, true};
      auto end = std::chrono::steady_clock::now();
      b->stats.seconds = std::chrono::duration<double>(end - start).count();
      return b;
    }
  }

  // Left generators: h_a(-1)h_b(-k) spans the quadratics modulo L(-1), which
  // circ_n absorbs by shifting n.
  struct Left {
    FockVector vec;
    int weight;
    std::uint64_t mask;
    std::string text;
  };
  std::vector<Left> lefts;
  std::set<Monomial> seen;
  auto add_left_monomial = [&](const Monomial& m) {
    if (!seen.insert(m).second) return;
    lefts.push_back({FockVector(Sector::Untwisted, m), m.weight2() / 2, m.sector_mask(), to_string(m)});
  };
  for (int a = 1; a <= rank_.ell(); ++a) {
    for (int bb = 1; bb <= rank_.ell(); ++bb) {
      for (int k = 1; k + 1 <= top; ++k) {
        std::vector<Mode> md{Mode::integral(a, -1), Mode::integral(bb, -k)};
        std::sort(md.begin(), md.end());
        add_left_monomial(Monomial(md));
      }
    }
  }
  if (policy_.max_left_modes > 2) {
    for (int w = 1; w <= top; ++w) {
      for (const auto& m : even_by_weight[w]) {
        if (static_cast<int>(m.length()) <= policy_.max_left_modes) add_left_monomial(m);
      }
    }
  }
  for (std::size_t i = 0; i < policy_.extra_left.size(); ++i) {
    const auto& v = policy_.extra_left[i];
    for (const auto& [w, part] : homogeneous_components(v)) {
      std::uint64_t mk = part.terms().begin()->first.sector_mask();
      bool uniform = std::all_of(part.terms().begin(), part.terms().end(),
                                 [&](const auto& t) { return t.first.sector_mask() == mk; });
      if (!uniform) throw Error("extra left generators must lie in one sector");
      lefts.push_back({part, w.twice / 2, mk, "extra-left#" + std::to_string(i)});
    }
  }

  using ModRow = SparseEchelon<ModPrimeField>::Row;
  using QRow = SparseEchelon<RationalField>::Row;
  SparseEchelon<ModPrimeField> modp(ncols);
  std::vector<std::pair<QRow, RowSource>> selected;
  std::size_t candidates = 0;

  auto to_rows = [&](const FockVector& v, QRow& q, ModRow& mp) {
    q.clear();
    mp.clear();
    for (const auto& [m, c] : v.terms()) {
      auto it = b->index.find(m);
      if (it == b->index.end()) throw Error("circle row leaves the column space");
      q.emplace_back(it->second, c);
    }
    std::sort(q.begin(), q.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [c, v2] : q) mp.emplace_back(c, ModPrimeField::from_rational(v2));
  };
  QRow q;
  ModRow mp;
  auto offer = [&](const FockVector& v, RowSource src) {
    ++candidates;
    if (v.is_zero()) return;
    to_rows(v, q, mp);
    if (modp.insert(mp)) selected.emplace_back(q, std::move(src));
  };

  // Caller-supplied rows first, then by increasing top weight.
  for (std::size_t i = 0; i < policy_.extra_rows.size(); ++i) {
    FockVector part(Sector::Untwisted);
    for (const auto& [m, c] : policy_.extra_rows[i].terms()) {
      if (m.sector_mask() == mask && m.parity() > 0 && m.weight2() <= 2 * top) part.add_term(m, c);
    }
    offer(part, {"extra-row#" + std::to_string(i), "", 0});
  }
  for (int t = 1; t <= top; ++t) {
    // (L(-1) + L(0)) v = circ_0(v, 1) for v of weight t - 1.
    for (const auto& v : even_by_weight[t - 1]) {
      if (v.sector_mask() != mask || v.is_vacuum()) continue;
      FockVector vv(Sector::Untwisted, v);
      offer(circ_n(vv, FockVector::vacuum(), 0), {to_string(v), "one", 0});
    }
    for (const auto& left : lefts) {
      for (int n = 0; left.weight + n + 1 <= t; ++n) {
        int wv = t - left.weight - n - 1;
        for (const auto& v : even_by_weight[wv]) {
          if ((v.sector_mask() ^ left.mask) != mask) continue;
          offer(circ_n(left.vec, FockVector(Sector::Untwisted, v), n), {left.text, to_string(v), n});
        }
      }
    }
  }

  b->echelon = std::make_unique<SparseEchelon<RationalField>>(ncols);
  for (auto& [row, src] : selected) {
    if (b->echelon->insert(row)) b->sources.push_back(std::move(src));
  }
  auto end = std::chrono::steady_clock::now();
  b->stats = {mask, static_cast<std::size_t>(ncols), candidates, b->echelon->rank(),
              std::chrono::duration<double>(end - start).count(), false};
  if (dir) {
    try {
      save_block(file, *b);
    } catch (const std::exception&) {
      // Cache writes are best effort.
    }
  }
  return b;
}

const OSpanEchelon::Block& OSpanEchelon::block(std::uint64_t mask) const {
  std::lock_guard lock(mu_);
  auto it = blocks_.find(mask);
  if (it != blocks_.end()) return *it->second;
  auto b = build_block(mask);
  if (b->stats.from_cache) ++cache_hits_;
  return *blocks_.emplace(mask, std::move(b)).first->second;
}

FockVector OSpanEchelon::reduce(const FockVector& x) const {
  check_untwisted(x);
  if (!is_even(x)) throw Error("reduce needs an even state");
  if (hzhu::max_weight(x).twice > 2 * max_weight_) {
    throw Error("state weight " + to_string(hzhu::max_weight(x)) + " exceeds the echelon cutoff " +
                std::to_string(max_weight_));
  }
  std::map<std::uint64_t, FockVector> by_mask;
  for (const auto& [m, c] : x.terms()) by_mask[m.sector_mask()].add_term(m, c);
  FockVector out;
  for (const auto& [mask, part] : by_mask) {
    const Block& b = block(mask);
    SparseEchelon<RationalField>::Row row;
    for (const auto& [m, c] : part.terms()) row.emplace_back(b.index.at(m), c);
    std::sort(row.begin(), row.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    for (const auto& [col, c] : b.echelon->reduce(row)) out.add_term(b.columns[col], c);
  }
  return out;
}

std::vector<RowSource> OSpanEchelon::provenance(std::uint64_t mask) const { return block(mask).sources; }

std::vector<BlockStats> OSpanEchelon::stats() const {
  std::lock_guard lock(mu_);
  std::vector<BlockStats> out;
  for (const auto& [m, b] : blocks_) out.push_back(b->stats);
  return out;
}

std::size_t OSpanEchelon::cache_hits() const {
  std::lock_guard lock(mu_);
  return cache_hits_;
}

std::unique_ptr<OSpanEchelon> build_ospan(Rank rank, int max_weight, int slack,
                                          const std::vector<FockVector>& extra_generators) {
  OSpanPolicy policy;
  policy.extra_left = extra_generators;
  return std::make_unique<OSpanEchelon>(rank, max_weight, slack, std::move(policy));
}

Verdict is_equiv(const FockVector& x, const FockVector& y, const OSpanEchelon& e) {
  return e.reduce(x - y).is_zero() ? Verdict::ProvedEqual : Verdict::Unknown;
}

namespace {

/// Unique solution of sum_j c_j cols[j] = target, or nullopt.
std::optional<std::vector<Rational>> solve_combination(const FockVector& target, const std::vector<FockVector>& cols) {
  std::map<Monomial, int> index;
  auto idx = [&](const Monomial& m) { return index.try_emplace(m, static_cast<int>(index.size())).first->second; };
  for (const auto& c : cols) {
    for (const auto& [m, v] : c.terms()) idx(m);
  }
  for (const auto& [m, v] : target.terms()) idx(m);
  const std::size_t k = cols.size();
  // Augmented system, one equation per monomial.
  std::vector<std::vector<Rational>> a(index.size(), std::vector<Rational>(k + 1, Rational(0)));
  for (std::size_t j = 0; j < k; ++j) {
    for (const auto& [m, v] : cols[j].terms()) a[index.at(m)][j] = v;
  }
  for (const auto& [m, v] : target.terms()) a[index.at(m)][k] = v;
  std::size_t r = 0;
  std::vector<std::size_t> pivcol;
  for (std::size_t c = 0; c < k && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && sgn(a[p][c]) == 0) ++p;
    if (p == a.size()) return std::nullopt;  // dependent columns: not unique
    std::swap(a[p], a[r]);
    Rational inv = Rational(1) / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j <= k; ++j) a[i][j] -= f * a[r][j];
    }
    pivcol.push_back(c);
    ++r;
  }
  if (pivcol.size() != k) return std::nullopt;
  for (std::size_t i = r; i < a.size(); ++i) {
    if (sgn(a[i][k]) != 0) return std::nullopt;  // inconsistent
  }
  std::vector<Rational> out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = a[i][k];
  return out;
}

}  // namespace

std::optional<std::vector<Rational>> express_modulo(const FockVector& x, const std::vector<FockVector>& basis,
                                                    const OSpanEchelon& e) {
  std::vector<FockVector> reduced;
  reduced.reserve(basis.size());
  for (const auto& b : basis) reduced.push_back(e.reduce(b));
  return solve_combination(e.reduce(x), reduced);
}

std::optional<std::vector<Rational>> express_modulo_rows(const FockVector& x, const std::vector<FockVector>& basis,
                                                         const std::vector<FockVector>& relations) {
  std::set<Monomial> all;
  auto collect = [&](const FockVector& v) {
    for (const auto& [m, c] : v.terms()) all.insert(m);
  };
  collect(x);
  for (const auto& b : basis) collect(b);
  for (const auto& r : relations) collect(r);
  std::vector<Monomial> cols(all.begin(), all.end());
  std::map<Monomial, int> index;
  for (std::size_t i = 0; i < cols.size(); ++i) index.emplace(cols[i], static_cast<int>(i));
  SparseEchelon<RationalField> ech(static_cast<int>(cols.size()));
  auto to_row = [&](const FockVector& v) {
    SparseEchelon<RationalField>::Row row;
    for (const auto& [m, c] : v.terms()) row.emplace_back(index.at(m), c);
    return row;  // map order equals column order
  };
  for (const auto& r : relations) ech.insert(to_row(r));
  auto back = [&](const SparseEchelon<RationalField>::Row& row) {
    FockVector v;
    for (const auto& [c, q] : row) v.add_term(cols[c], q);
    return v;
  };
  std::vector<FockVector> reduced;
  for (const auto& b : basis) reduced.push_back(back(ech.reduce(to_row(b))));
  return solve_combination(back(ech.reduce(to_row(x))), reduced);
}

}  // namespace hzhu
