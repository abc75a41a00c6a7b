#ifndef MOTIVOL_NUMTHEORY_HPP
#define MOTIVOL_NUMTHEORY_HPP

#include "motivol/rat.hpp"

#include <vector>

namespace motivol {

inline std::vector<long> divisors(long n)
{
    if (n < 1) throw error("divisors: n must be >= 1");
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

inline int mobius(long n)
{
    if (n < 1) throw error("mobius: n must be >= 1");
    int factors = 0;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        ++factors;
    }
    if (n > 1) ++factors;
    return factors % 2 == 0 ? 1 : -1;
}

inline long gcd_long(long a, long b)
{
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

}  // namespace motivol

#endif
