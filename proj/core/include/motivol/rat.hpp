#ifndef MOTIVOL_RAT_HPP
#define MOTIVOL_RAT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace motivol {

// et_off so arithmetic yields concrete values inside generic series code
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline BigInt numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline BigInt pow_big(const BigInt& b, unsigned long e)
{
    BigInt acc = 1, base = b;
    unsigned long k = e;
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

// q^e for possibly negative e
inline Rat pow_rat(const Rat& b, long e)
{
    if (e >= 0) {
        Rat acc = 1, base = b;
        long k = e;
        while (k) {
            if (k & 1) acc *= base;
            base *= base;
            k >>= 1;
        }
        return acc;
    }
    if (b == 0) throw error("pow_rat: 0 to negative power");
    return 1 / pow_rat(b, -e);
}

// "p" for integers, "p/q" otherwise
inline std::string rat_to_string(const Rat& r)
{
    std::string s = numerator(r).str();
    if (!is_integer(r)) s += "/" + denominator(r).str();
    return s;
}

inline Rat rat_from_string(const std::string& s)
{
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw error("rat_from_string: zero denominator in '" + s + "'");
    return Rat(num, den);
}

// Round-half-away-from-zero decimal rendering with `digits` significant digits.
// Display only; every comparison in the library is exact.
inline std::string rat_to_decimal(const Rat& r, int digits = 9)
{
    if (digits < 1) digits = 1;
    if (r == 0) {
        std::string z = "0.";
        z.append(static_cast<size_t>(digits - 1), '0');
        return z;
    }
    bool neg = r < 0;
    BigInt n = boost::multiprecision::abs(numerator(r));
    BigInt d = denominator(r);
    // integer part width
    BigInt ip = n / d;
    std::string ipstr = ip.str();
    int int_digits = (ip == 0) ? 0 : static_cast<int>(ipstr.size());
    int frac_digits = digits - int_digits;
    if (frac_digits < 0) frac_digits = 0;
    // leading zeros after the point (|r| < 1) do not count as significant
    if (ip == 0) {
        BigInt probe = n;
        while (probe * 10 < d) {
            probe *= 10;
            ++frac_digits;
        }
    }
    BigInt scale = pow_big(10, static_cast<unsigned long>(frac_digits));
    BigInt scaled = n * scale;
    BigInt q = scaled / d, rem = scaled % d;
    if (2 * rem >= d) ++q;
    std::string s = q.str();
    if (static_cast<int>(s.size()) <= frac_digits)
        s.insert(0, static_cast<size_t>(frac_digits + 1 - s.size()), '0');
    if (frac_digits > 0) s.insert(s.size() - static_cast<size_t>(frac_digits), ".");
    if (neg) s.insert(0, "-");
    return s;
}

}  // namespace motivol

#endif
