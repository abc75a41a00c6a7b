#ifndef MOTIVOL_NEWTON_HPP
#define MOTIVOL_NEWTON_HPP

#include "motivol/polynomial.hpp"
#include "motivol/series.hpp"

namespace motivol {

// P_{n,m}(T_1..T_n): the coefficient of t^m in  t (d/dt) log(1 + sum T_i t^i),
// evaluated by running dlog over the supplied coefficient ring. On elementary
// symmetric inputs this yields (-1)^(m+1) times the m-th power sum.
template <Ring R>
R newton_pnm(const std::vector<R>& values, int m)
{
    if (values.empty()) throw error("newton_pnm: empty value list");
    if (m < 1) throw error("newton_pnm: m must be >= 1");
    const R model = ring_ops<R>::zero(values[0]);
    TruncatedSeries<R> a = TruncatedSeries<R>::one(m, model);
    for (size_t i = 0; i < values.size() && static_cast<int>(i) + 1 <= m; ++i)
        a[static_cast<int>(i) + 1] = values[i];
    return dlog(a)[m];
}

// Power-sum normalization (-1)^(m+1) P_{n,m}: on [tr Lambda^1 f .. tr Lambda^d f]
// it returns tr(f^m) on the nose, which is the form the trace identities use.
template <Ring R>
R newton_power_sum(const std::vector<R>& values, int m)
{
    R p = newton_pnm(values, m);
    return m % 2 == 1 ? p : ring_ops<R>::zero(p) - p;
}

// Symbolic P_{n,m} in the polynomial ring Q[T1..Tn].
inline MultiPoly newton_pnm_polynomial(int n, int m)
{
    if (n < 1) throw error("newton_pnm_polynomial: n must be >= 1");
    std::vector<MultiPoly> vars;
    vars.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) vars.push_back(MultiPoly::variable(i, n));
    return newton_pnm(vars, m);
}

}  // namespace motivol

#endif
