#include "motivol/macdonald.hpp"

#include "motivol/newton.hpp"
#include "motivol/numtheory.hpp"

namespace motivol {

CohTail poincare(const CohProfile& p)
{
    CohClass zero = CohClass::zero(p.group(), p.registry());
    CohTail out(0, zero);
    for (const auto& [i, cls] : p.entries()) out.set(i, cls);
    return out;
}

CohTailSeries macdonald_zeta(const CohProfile& p, int K)
{
    if (K < 0) throw error("macdonald_zeta: negative precision");
    CohClass zero = CohClass::zero(p.group(), p.registry());
    CohTail tail_zero(0, zero);
    CohTail tail_one = CohTail::one(0, zero);
    CohTailSeries num = CohTailSeries::one(K, tail_zero);
    CohTailSeries den = CohTailSeries::one(K, tail_zero);
    for (const auto& [i, cls] : p.entries()) {
        int b = p.betti(i);
        CohTailSeries factor(K, tail_zero);
        for (int j = 0; j <= std::min(b, K); ++j) {
            CohClass lam = p.exterior(i, j);
            if (i % 2 == 0 && j % 2 == 1) lam = lam.scaled(-1);
            factor[j] = CohTail::monomial(0, lam, i * j);
        }
        if (i % 2 == 1)
            num = num * factor;
        else
            den = den * factor;
    }
    (void)tail_one;
    return num * series_inv(den);
}

CohTail phi_n(const CohProfile& p, int n)
{
    if (n < 1) throw error("phi_n: n must be >= 1");
    CohClass zero = CohClass::zero(p.group(), p.registry());
    CohTail out(0, zero);
    for (const auto& [i, cls] : p.entries()) {
        int b = p.betti(i);
        if (b == 0) continue;
        std::vector<CohClass> lambda;
        lambda.reserve(static_cast<size_t>(b));
        for (int j = 1; j <= b; ++j) lambda.push_back(p.exterior(i, j));
        CohClass coeff = newton_power_sum(lambda, n);
        if ((static_cast<long>(n) + 1) * i % 2 == 1) coeff = coeff.scaled(-1);
        out.set(n * i, out.coefficient(n * i) + coeff);
    }
    return out;
}

CohTail psi_n(const CohProfile& p, int n)
{
    if (n < 1) throw error("psi_n: n must be >= 1");
    CohClass zero = CohClass::zero(p.group(), p.registry());
    CohTail acc(0, zero);
    for (long d : divisors(n)) {
        int mu = mobius(n / d);
        if (mu == 0) continue;
        acc = acc + phi_n(p, static_cast<int>(d)).scaled(Rat(mu, n));
    }
    return acc;
}

Rat trace_at_u_minus_one(const CohTail& t, long m, const Rat& q)
{
    Rat acc = 0;
    for (const auto& [e, cls] : t.terms()) {
        Rat v = cls.trace_at(m, q);
        acc += (e % 2 == 0) ? v : -v;
    }
    return acc;
}

}  // namespace motivol
