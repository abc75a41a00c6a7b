#ifndef MOTIVOL_CURVE_HPP
#define MOTIVOL_CURVE_HPP

#include "motivol/series.hpp"

#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace motivol {

// Point counts N_m = |C(F_{q^m})| of a smooth projective geometrically
// integral curve, with the Weil bound |N_m - q^m - 1| <= 2g q^(m/2) checked
// on access.
class CurveCounts {
public:
    static CurveCounts p1(const Rat& q);
    // N_m = q^m + 1 - s_m with the trace recurrence s_m = a s_{m-1} - q s_{m-2}
    static CurveCounts elliptic(const Rat& a, const Rat& q);
    static CurveCounts from_counts(const Rat& q, int genus, std::vector<BigInt> counts,
                                   std::string label = "counts");
    // Spec(F_q): N_m = 1; zero-dimensional, so the curve Weil bound is off
    static CurveCounts point(const Rat& q);

    // the same curve over F_{q^s}: N'_m = N_{s m}
    CurveCounts base_change(long s) const;

    const Rat& q() const { return q_; }
    int genus() const { return genus_; }
    int b1() const { return 2 * genus_; }
    const std::string& label() const { return label_; }
    long max_degree() const { return max_degree_; }

    BigInt count(long m) const;
    // closed points of degree n: (1/n) sum_{d|n} mu(n/d) N_d
    BigInt closed_points(long n) const;

private:
    CurveCounts(Rat q, int genus, std::function<BigInt(long)> counter, long max_degree,
                std::string label);

    Rat q_;
    int genus_ = 0;
    std::function<BigInt(long)> counter_;
    long max_degree_ = std::numeric_limits<long>::max();
    std::string label_;
    bool zero_dimensional_ = false;
};

// exp(sum N_m t^m / m), truncated at t^K
TruncatedSeries<Rat> zeta_hw(const CurveCounts& c, int K);
// the same zeta as the Euler product prod (1 - t^n)^(-c_n); independent route
TruncatedSeries<Rat> zeta_hw_euler(const CurveCounts& c, int K);

}  // namespace motivol

#endif
