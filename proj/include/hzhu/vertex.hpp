#pragma once

#include <vector>

#include "hzhu/fock.hpp"

namespace hzhu {

namespace detail {

/// Component index `m` of the normally ordered field of the untwisted
/// source `v`, acting on `target` in whichever sector the target lives.
/// Integral modes give Y(v,z); half-integral modes give W_theta(v,z).
template <class C>
BasicFockVector<C> normal_ordered_component(const FockVector& v, int m, const BasicFockVector<C>& target,
                                            const std::vector<C>* lambda);

}  // namespace detail

/// v_m, the coefficient of z^{-m-1} in Y(v,z), applied to an untwisted
/// target. `lambda` supplies the h(0) eigenvalues on M(1,lambda); without it
/// the target is a state of the vacuum module.
template <class C>
BasicFockVector<C> mode_operator(const FockVector& v, int m, const BasicFockVector<C>& target,
                                 const std::vector<C>* lambda = nullptr);

/// L_a(n) = (omega_a)_{n+1}.
template <class C>
BasicFockVector<C> virasoro(int a, int n, const BasicFockVector<C>& v, const std::vector<C>* lambda = nullptr);

/// o(v) = v_{wt v - 1}, extended linearly over homogeneous components.
template <class C>
BasicFockVector<C> zero_mode(const FockVector& v, const BasicFockVector<C>& target,
                             const std::vector<C>* lambda = nullptr);

/// omega_a = 1/2 h_a(-1)^2.
FockVector omega(int a);

/// Total L(n) = sum over a of L_a(n).
FockVector virasoro_total(Rank rank, int n, const FockVector& v);

}  // namespace hzhu
