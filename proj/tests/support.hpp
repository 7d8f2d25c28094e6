#pragma once

// Reference computations for the tests. Mode actions of composite states are
// recomputed here from the Borcherds iterate formula, using only the
// oscillator action apply_mode, so they share no code with the vertex engine.

#include <algorithm>
#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include "hzhu/eval.hpp"
#include "hzhu/fock.hpp"
#include "hzhu/vertex.hpp"
#include "hzhu/zhu.hpp"

namespace hzhu::testing {

/// u_n v for a monomial u, by recursion on the modes of u:
/// (a_m w)_n = sum_j (-1)^j C(m,j) (a_{m-j} w_{n+j} - (-1)^m w_{m+n-j} a_j), a = h_g(-1)1.
inline FockVector oracle_mode(const Monomial& u, int n, const FockVector& v) {
  if (v.is_zero()) return v;
  if (u.is_vacuum()) return n == -1 ? v : FockVector(v.sector());
  const Mode a = u.modes().front();
  const int m = a.twice / 2;
  const Monomial w = u.without(a);
  const int wt_w = w.weight2() / 2;
  const int wt_v = max_weight(v).twice / 2;
  FockVector out(v.sector());
  // b_p v vanishes once p >= wt b + wt v; h(j) v vanishes once j > wt v.
  const int bound = std::max(wt_w + wt_v - n, wt_v);
  for (int j = 0; j <= bound; ++j) {
    Rational c = binomial(static_cast<long>(m), j);
    if (j % 2) c = -c;
    if (n + j < wt_w + wt_v) {
      FockVector t = apply_mode(a.gen, 2 * (m - j), oracle_mode(w, n + j, v));
      out += c * t;
    }
    if (j <= wt_v) {
      FockVector aj = apply_mode(a.gen, 2 * j, v);
      if (!aj.is_zero()) {
        Rational s = (m % 2 == 0) ? c : -c;
        out -= s * oracle_mode(w, m + n - j, aj);
      }
    }
  }
  return out;
}

inline FockVector oracle_mode(const FockVector& u, int n, const FockVector& v) {
  FockVector out(v.sector());
  for (const auto& [m, c] : u.terms()) out += c * oracle_mode(m, n, v);
  return out;
}

/// sum_i C(wt u, i) u_{i-n-2} v over homogeneous parts of u.
inline FockVector oracle_circ(const FockVector& u, const FockVector& v, int n) {
  FockVector out;
  for (const auto& [m, c] : u.terms()) {
    const int wt = m.weight2() / 2;
    for (int i = 0; i <= wt; ++i) out += (c * binomial(static_cast<long>(wt), i)) * oracle_mode(m, i - n - 2, v);
  }
  return out;
}

inline FockVector oracle_star(const FockVector& u, const FockVector& v) {
  FockVector out;
  for (const auto& [m, c] : u.terms()) {
    const int wt = m.weight2() / 2;
    for (int i = 0; i <= wt; ++i) out += (c * binomial(static_cast<long>(wt), i)) * oracle_mode(m, i - 1, v);
  }
  return out;
}

inline std::vector<FockVector> basis_vectors(Rank rank, int max_wt, ParityFilter filter) {
  std::vector<FockVector> out;
  for (int w = 0; w <= max_wt; ++w)
    for (const auto& m : basis(rank, Sector::Untwisted, HalfInteger::from_integer(w), filter))
      out.emplace_back(Sector::Untwisted, m);
  return out;
}

/// Named generators used by the property checks.
inline std::vector<NamedElement> named_generators(Rank rank) {
  std::vector<std::string> names{"omega(1)", "J(1)", "H(1)"};
  if (rank.ell() >= 2) {
    for (const char* s : {"omega(2)", "S(1,1;2,1)", "S(1,2;2,1)", "Eu(1,2)", "Et(1,2)", "Lam(1,2)", "EuBar(2,1)",
                          "EtBar(2,1)"})
      names.emplace_back(s);
  }
  std::vector<NamedElement> out;
  for (const auto& n : names) out.push_back(named_element(n, rank));
  return out;
}

struct PropertyResult {
  std::size_t checked = 0;
  std::string failure;  // empty when every case held
  bool ok() const { return failure.empty(); }
};

inline PropertyResult parity_closure(Rank rank, int max_wt) {
  PropertyResult r;
  auto even = basis_vectors(rank, max_wt, ParityFilter::Even);
  for (const auto& u : even)
    for (const auto& v : even) {
      ++r.checked;
      if (!is_even(star(u, v)) || !is_even(circ_n(u, v, 0)) || !is_even(circ_n(u, v, 1))) {
        r.failure = "odd term in product of " + to_string(u) + " and " + to_string(v);
        return r;
      }
    }
  return r;
}

inline PropertyResult circle_annihilation(Rank rank) {
  PropertyResult r;
  auto gens = named_generators(rank);
  for (const auto& a : gens)
    for (const auto& b : gens)
      for (int n = 0; n <= 1; ++n) {
        ++r.checked;
        auto ev = evaluate_all(circ_n(a.realization, b.realization, n), rank);
        for (std::size_t f = 0; f < ev.size(); ++f) {
          if (!ev[f].is_zero()) {
            r.failure = "circ_" + std::to_string(n) + "(" + a.name + ", " + b.name + ") acts as " +
                        ev[f].to_string() + " on " + to_string(all_families()[f]);
            return r;
          }
        }
      }
  return r;
}

inline PropertyResult star_homomorphism(Rank rank) {
  PropertyResult r;
  auto gens = named_generators(rank);
  for (const auto& a : gens)
    for (const auto& b : gens) {
      ++r.checked;
      auto prod = evaluate_all(star(a.realization, b.realization), rank);
      auto ea = evaluate_all(a.realization, rank), eb = evaluate_all(b.realization, rank);
      for (std::size_t f = 0; f < prod.size(); ++f) {
        if (!(prod[f] == ea[f] * eb[f])) {
          r.failure = a.name + " * " + b.name + " on " + to_string(all_families()[f]);
          return r;
        }
      }
    }
  return r;
}

inline PropertyResult oracle_agreement(Rank rank, int max_wt) {
  PropertyResult r;
  auto all = basis_vectors(rank, max_wt, ParityFilter::All);
  for (const auto& u : all)
    for (const auto& v : all) {
      ++r.checked;
      if (!(star(u, v) == oracle_star(u, v))) {
        r.failure = "star(" + to_string(u) + ", " + to_string(v) + ")";
        return r;
      }
      for (int n = 0; n <= 1; ++n) {
        if (!(circ_n(u, v, n) == oracle_circ(u, v, n))) {
          r.failure = "circ_" + std::to_string(n) + "(" + to_string(u) + ", " + to_string(v) + ")";
          return r;
        }
      }
    }
  return r;
}

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace hzhu::testing
