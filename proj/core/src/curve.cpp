#include "motivol/curve.hpp"

#include "motivol/numtheory.hpp"

namespace motivol {

CurveCounts::CurveCounts(Rat q, int genus, std::function<BigInt(long)> counter, long max_degree,
                         std::string label)
    : q_(std::move(q)),
      genus_(genus),
      counter_(std::move(counter)),
      max_degree_(max_degree),
      label_(std::move(label))
{
    if (!is_integer(q_) || q_ < 2) throw error("CurveCounts: q must be a prime power >= 2");
    if (genus_ < 0) throw error("CurveCounts: negative genus");
}

CurveCounts CurveCounts::p1(const Rat& q)
{
    BigInt qi = numerator(q);
    return CurveCounts(q, 0, [qi](long m) { return pow_big(qi, static_cast<unsigned long>(m)) + 1; },
                       std::numeric_limits<long>::max(), "p1");
}

CurveCounts CurveCounts::elliptic(const Rat& a, const Rat& q)
{
    if (!is_integer(a)) throw error("CurveCounts::elliptic: trace must be an integer");
    BigInt ai = numerator(a), qi = numerator(q);
    auto counter = [ai, qi](long m) {
        BigInt s_prev = 2, s = ai;  // s_0, s_1
        for (long i = 2; i <= m; ++i) {
            BigInt next = ai * s - qi * s_prev;
            s_prev = s;
            s = next;
        }
        BigInt sm = (m == 0) ? s_prev : s;
        return pow_big(qi, static_cast<unsigned long>(m)) + 1 - sm;
    };
    return CurveCounts(q, 1, counter, std::numeric_limits<long>::max(),
                       "elliptic(a=" + rat_to_string(a) + ")");
}

CurveCounts CurveCounts::from_counts(const Rat& q, int genus, std::vector<BigInt> counts,
                                     std::string label)
{
    long m = static_cast<long>(counts.size());
    auto counter = [counts](long i) {
        if (i < 1 || i > static_cast<long>(counts.size()))
            throw error("CurveCounts: count N_" + std::to_string(i) + " not available");
        return counts[static_cast<size_t>(i - 1)];
    };
    return CurveCounts(q, genus, counter, m, std::move(label));
}

CurveCounts CurveCounts::point(const Rat& q)
{
    CurveCounts c(q, 0, [](long) { return BigInt(1); }, std::numeric_limits<long>::max(), "point");
    c.zero_dimensional_ = true;
    return c;
}

CurveCounts CurveCounts::base_change(long s) const
{
    if (s < 1) throw error("CurveCounts::base_change: s must be >= 1");
    auto inner = counter_;
    long md = max_degree_ == std::numeric_limits<long>::max() ? max_degree_ : max_degree_ / s;
    CurveCounts c(pow_rat(q_, s), genus_, [inner, s](long m) { return inner(s * m); }, md,
                  label_ + "/deg" + std::to_string(s));
    c.zero_dimensional_ = zero_dimensional_;
    return c;
}

BigInt CurveCounts::count(long m) const
{
    if (m < 1) throw error("CurveCounts: m must be >= 1");
    BigInt n = counter_(m);
    if (n < 0) throw error("CurveCounts: negative point count");
    if (!zero_dimensional_) {
        // Weil bound, squared to stay in integer arithmetic
        BigInt qm = numerator(pow_rat(q_, m));
        BigInt dev = n - qm - 1;
        if (dev * dev > BigInt(4) * genus_ * genus_ * qm)
            throw error("CurveCounts: counts violate the Weil bound at m=" + std::to_string(m));
    }
    return n;
}

BigInt CurveCounts::closed_points(long n) const
{
    if (n < 1) throw error("closed_points: n must be >= 1");
    BigInt acc = 0;
    for (long d : divisors(n)) acc += mobius(n / d) * count(d);
    if (acc % n != 0) throw error("closed_points: Moebius sum not divisible by n");
    BigInt c = acc / n;
    if (c < 0) throw error("closed_points: negative count");
    return c;
}

TruncatedSeries<Rat> zeta_hw(const CurveCounts& c, int K)
{
    TruncatedSeries<Rat> logz(K, Rat(0));
    for (int m = 1; m <= K; ++m) logz[m] = Rat(c.count(m)) / m;
    return series_exp(logz);
}

TruncatedSeries<Rat> zeta_hw_euler(const CurveCounts& c, int K)
{
    TruncatedSeries<Rat> acc = TruncatedSeries<Rat>::one(K, Rat(0));
    for (int n = 1; n <= K; ++n) {
        TruncatedSeries<Rat> factor = TruncatedSeries<Rat>::one(K, Rat(0));
        factor[n] = -1;
        acc = acc * series_pow_int(factor, -c.closed_points(n));
    }
    return acc;
}

}  // namespace motivol
