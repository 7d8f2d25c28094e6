#include "hzhu/vertex.hpp"

#include <map>
#include <utility>

namespace hzhu {

namespace {

/// d_{r,n} = C(-r-1, n-1) with r = twice_r / 2.
class DCache {
public:
  const Rational& get(int twice_r, int n) {
    auto key = std::make_pair(twice_r, n);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Rational top(-twice_r - 2, 2);
    top.canonicalize();
    return cache_.emplace(key, binomial(top, n - 1)).first->second;
  }

private:
  std::map<std::pair<int, int>, Rational> cache_;
};

template <class C>
void scale(C& c, const Rational& s) {
  scale_by(c, s);
}

/// One state of the expansion: modes created so far and what is left of
/// the target monomial after the annihilations so far.
struct StateKey {
  Monomial created;
  Monomial remaining;
  friend auto operator<=>(const StateKey&, const StateKey&) = default;
};

template <class C>
void expand_monomial(const Monomial& src, const Rational& src_coeff, int component, const Monomial& tgt,
                     const C& tgt_coeff, Sector sector, const std::vector<C>* lambda, DCache& dc,
                     BasicFockVector<C>& out) {
  // Created minus annihilated mode-weight (twice values) must equal d2.
  const int d2 = src.weight2() - 2 * component - 2;
  const int orig2 = tgt.weight2();
  const int max_created2 = d2 + orig2;
  if (max_created2 < 0) return;

  std::map<StateKey, C> states;
  states.emplace(StateKey{Monomial{}, tgt}, C(1));

  for (const Mode& factor : src.modes()) {
    const int g = factor.gen;
    const int n = -factor.twice / 2;
    std::map<StateKey, C> next;
    auto push = [&next](StateKey key, C c) {
      if (hzhu::is_zero(c)) return;
      auto [it, inserted] = next.try_emplace(std::move(key), c);
      if (!inserted) {
        it->second += c;
        if (hzhu::is_zero(it->second)) next.erase(it);
      }
    };
    for (const auto& [key, coeff] : states) {
      const int created2 = key.created.weight2();
      // Annihilation against a mode of the remaining target.
      const auto& rem = key.remaining.modes();
      for (std::size_t i = 0; i < rem.size();) {
        std::size_t j = i;
        while (j < rem.size() && rem[j] == rem[i]) ++j;
        if (rem[i].gen == g) {
          int twice_r = -rem[i].twice;
          Rational r(twice_r, 2);
          r.canonicalize();
          C c = coeff;
          scale(c, dc.get(twice_r, n) * r * Rational(static_cast<long>(j - i)));
          push(StateKey{key.created, key.remaining.without(rem[i])}, std::move(c));
        }
        i = j;
      }
      // Zero mode.
      if (sector == Sector::Untwisted && lambda != nullptr) {
        C c = coeff;
        c *= (*lambda)[g - 1];
        scale(c, dc.get(0, n));
        push(key, std::move(c));
      }
      // Creation: r <= -n untwisted, r <= -1/2 twisted.
      const int first2 = sector == Sector::Untwisted ? 2 * n : 1;
      for (int w2 = first2; created2 + w2 <= max_created2; w2 += 2) {
        C c = coeff;
        scale(c, dc.get(-w2, n));
        push(StateKey{key.created.with(Mode{g, -w2}), key.remaining}, std::move(c));
      }
    }
    states = std::move(next);
    if (states.empty()) return;
  }

  for (const auto& [key, coeff] : states) {
    int annihilated2 = orig2 - key.remaining.weight2();
    if (key.created.weight2() - annihilated2 != d2) continue;
    C c = coeff;
    c *= tgt_coeff;
    scale(c, src_coeff);
    out.add_term(key.created * key.remaining, c);
  }
}

}  // namespace

namespace detail {

template <class C>
BasicFockVector<C> normal_ordered_component(const FockVector& v, int m, const BasicFockVector<C>& target,
                                            const std::vector<C>* lambda) {
  if (!v.is_zero() && v.sector() != Sector::Untwisted) throw Error("source state must be untwisted");
  BasicFockVector<C> out(target.sector());
  if (lambda != nullptr && target.sector() != Sector::Untwisted) {
    throw Error("highest weight applies to untwisted modules only");
  }
  for (const auto& [sm, sc] : v.terms()) {
    if (lambda != nullptr) {
      for (const auto& md : sm.modes()) {
        if (md.gen > static_cast<int>(lambda->size())) throw Error("generator index exceeds lambda");
      }
    }
  }
  DCache dc;
  for (const auto& [tm, tc] : target.terms()) {
    for (const auto& [sm, sc] : v.terms()) {
      expand_monomial(sm, sc, m, tm, tc, target.sector(), lambda, dc, out);
    }
  }
  return out;
}

template FockVector normal_ordered_component(const FockVector&, int, const FockVector&,
                                             const std::vector<Rational>*);
template PolyFockVector normal_ordered_component(const FockVector&, int, const PolyFockVector&,
                                                 const std::vector<LambdaPoly>*);

}  // namespace detail

template <class C>
BasicFockVector<C> mode_operator(const FockVector& v, int m, const BasicFockVector<C>& target,
                                 const std::vector<C>* lambda) {
  if (!target.is_zero() && target.sector() != Sector::Untwisted) {
    throw Error("mode_operator needs an untwisted target");
  }
  return detail::normal_ordered_component(v, m, target, lambda);
}

template <class C>
BasicFockVector<C> virasoro(int a, int n, const BasicFockVector<C>& v, const std::vector<C>* lambda) {
  return mode_operator(omega(a), n + 1, v, lambda);
}

template <class C>
BasicFockVector<C> zero_mode(const FockVector& v, const BasicFockVector<C>& target, const std::vector<C>* lambda) {
  BasicFockVector<C> out(target.sector());
  for (const auto& [w, part] : homogeneous_components(v)) {
    if (!w.is_integer()) throw Error("zero mode needs integral weight");
    out += mode_operator(part, w.twice / 2 - 1, target, lambda);
  }
  return out;
}

template FockVector mode_operator(const FockVector&, int, const FockVector&, const std::vector<Rational>*);
template PolyFockVector mode_operator(const FockVector&, int, const PolyFockVector&,
                                      const std::vector<LambdaPoly>*);
template FockVector virasoro(int, int, const FockVector&, const std::vector<Rational>*);
template PolyFockVector virasoro(int, int, const PolyFockVector&, const std::vector<LambdaPoly>*);
template FockVector zero_mode(const FockVector&, const FockVector&, const std::vector<Rational>*);
template PolyFockVector zero_mode(const FockVector&, const PolyFockVector&, const std::vector<LambdaPoly>*);

FockVector omega(int a) {
  if (a < 1) throw Error("generator index out of range");
  return FockVector(Sector::Untwisted, Monomial({Mode::integral(a, -1), Mode::integral(a, -1)}), Rational(1, 2));
}

FockVector virasoro_total(Rank rank, int n, const FockVector& v) {
  FockVector out;
  for (int a = 1; a <= rank.ell(); ++a) out += virasoro(a, n, v);
  return out;
}

}  // namespace hzhu
