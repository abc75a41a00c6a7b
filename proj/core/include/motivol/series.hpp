#ifndef MOTIVOL_SERIES_HPP
#define MOTIVOL_SERIES_HPP

#include "motivol/ring.hpp"

#include <vector>

namespace motivol {

// Power series in t truncated at a fixed precision K: exactly K+1 retained
// coefficients c_0..c_K over a commutative Q-algebra R. Binary operations
// require equal precision; callers truncate first.
template <Ring R>
class TruncatedSeries {
public:
    TruncatedSeries(int precision, const R& model)
        : coeff_(static_cast<size_t>(check_precision(precision)) + 1, ring_ops<R>::zero(model))
    {
    }

    explicit TruncatedSeries(std::vector<R> coeff) : coeff_(std::move(coeff))
    {
        if (coeff_.empty()) throw error("TruncatedSeries: empty coefficient list");
    }

    static TruncatedSeries one(int precision, const R& model)
    {
        TruncatedSeries s(precision, model);
        s.coeff_[0] = ring_ops<R>::one(model);
        return s;
    }

    int precision() const { return static_cast<int>(coeff_.size()) - 1; }
    const R& operator[](int n) const { return coeff_.at(static_cast<size_t>(n)); }
    R& operator[](int n) { return coeff_.at(static_cast<size_t>(n)); }
    const std::vector<R>& coefficients() const { return coeff_; }

    const R& model() const { return coeff_[0]; }

    bool operator==(const TruncatedSeries& o) const { return coeff_ == o.coeff_; }

    TruncatedSeries operator+(const TruncatedSeries& o) const
    {
        require_same_precision(o);
        TruncatedSeries out = *this;
        for (size_t i = 0; i < coeff_.size(); ++i) out.coeff_[i] = out.coeff_[i] + o.coeff_[i];
        return out;
    }

    TruncatedSeries operator-(const TruncatedSeries& o) const
    {
        require_same_precision(o);
        TruncatedSeries out = *this;
        for (size_t i = 0; i < coeff_.size(); ++i) out.coeff_[i] = out.coeff_[i] - o.coeff_[i];
        return out;
    }

    TruncatedSeries operator*(const TruncatedSeries& o) const
    {
        require_same_precision(o);
        TruncatedSeries out(precision(), model());
        for (size_t i = 0; i < coeff_.size(); ++i) {
            if (ring_is_zero(coeff_[i])) continue;
            for (size_t j = 0; i + j < coeff_.size(); ++j)
                out.coeff_[i + j] = out.coeff_[i + j] + coeff_[i] * o.coeff_[j];
        }
        return out;
    }

    TruncatedSeries scaled(const Rat& c) const
    {
        TruncatedSeries out = *this;
        for (auto& x : out.coeff_) x = ring_ops<R>::scale(x, c);
        return out;
    }

    TruncatedSeries truncated(int new_precision) const
    {
        if (new_precision > precision()) throw error("TruncatedSeries: cannot raise precision");
        std::vector<R> c(coeff_.begin(), coeff_.begin() + new_precision + 1);
        return TruncatedSeries(std::move(c));
    }

private:
    static int check_precision(int k)
    {
        if (k < 0) throw error("TruncatedSeries: precision must be >= 0");
        return k;
    }

    void require_same_precision(const TruncatedSeries& o) const
    {
        if (coeff_.size() != o.coeff_.size())
            throw error("TruncatedSeries: precision mismatch (" + std::to_string(precision()) +
                        " vs " + std::to_string(o.precision()) + ")");
    }

    std::vector<R> coeff_;
};

// Reciprocal of a unit series (constant term 1).
template <Ring R>
TruncatedSeries<R> series_inv(const TruncatedSeries<R>& a)
{
    const R one = ring_ops<R>::one(a.model());
    if (!(a[0] == one)) throw error("series_inv: not a unit series (constant term != 1)");
    TruncatedSeries<R> out(a.precision(), a.model());
    out[0] = one;
    for (int n = 1; n <= a.precision(); ++n) {
        R acc = ring_ops<R>::zero(a.model());
        for (int k = 1; k <= n; ++k) acc = acc + a[k] * out[n - k];
        out[n] = ring_ops<R>::zero(a.model()) - acc;
    }
    return out;
}

template <Ring R>
TruncatedSeries<R> series_log(const TruncatedSeries<R>& a)
{
    if (!(a[0] == ring_ops<R>::one(a.model())))
        throw error("series_log: constant term must be 1");
    // log(1+x) = sum (-1)^(k+1) x^k / k, with x nilpotent mod t^(K+1)
    TruncatedSeries<R> x = a;
    x[0] = ring_ops<R>::zero(a.model());
    TruncatedSeries<R> out(a.precision(), a.model());
    TruncatedSeries<R> xp = x;
    for (int k = 1; k <= a.precision(); ++k) {
        Rat c = (k % 2 == 1) ? Rat(1, k) : Rat(-1, k);
        out = out + xp.scaled(c);
        if (k < a.precision()) xp = xp * x;
    }
    return out;
}

template <Ring R>
TruncatedSeries<R> series_exp(const TruncatedSeries<R>& a)
{
    if (!ring_is_zero(a[0])) throw error("series_exp: constant term must be 0");
    TruncatedSeries<R> out = TruncatedSeries<R>::one(a.precision(), a.model());
    TruncatedSeries<R> ap = TruncatedSeries<R>::one(a.precision(), a.model());
    Rat fact = 1;
    for (int k = 1; k <= a.precision(); ++k) {
        ap = ap * a;
        fact *= k;
        out = out + ap.scaled(1 / fact);
    }
    return out;
}

// P(t)^e = exp(e log P(t)) for a ring-element exponent
template <Ring R>
TruncatedSeries<R> series_pow(const TruncatedSeries<R>& a, const R& e)
{
    TruncatedSeries<R> la = series_log(a);
    for (int n = 0; n <= la.precision(); ++n) la[n] = la[n] * e;
    return series_exp(la);
}

template <Ring R>
    requires(!std::same_as<R, Rat>)
TruncatedSeries<R> series_pow(const TruncatedSeries<R>& a, const Rat& e)
{
    return series_exp(series_log(a).scaled(e));
}

// Integer power by repeated squaring; exponents of Euler-product size
// (counts of closed points) stay exact.
template <Ring R>
TruncatedSeries<R> series_pow_int(const TruncatedSeries<R>& a, const BigInt& e)
{
    if (e < 0) return series_pow_int(series_inv(a), -e);
    TruncatedSeries<R> acc = TruncatedSeries<R>::one(a.precision(), a.model());
    TruncatedSeries<R> base = a;
    BigInt k = e;
    while (k > 0) {
        if ((k & 1) != 0) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

// t a'(t)/a(t); constant term of the result is 0.
template <Ring R>
TruncatedSeries<R> dlog(const TruncatedSeries<R>& a)
{
    if (!(a[0] == ring_ops<R>::one(a.model())))
        throw error("dlog: constant term must be 1");
    TruncatedSeries<R> num(a.precision(), a.model());
    for (int n = 1; n <= a.precision(); ++n) num[n] = ring_ops<R>::scale(a[n], Rat(n));
    return num * series_inv(a);
}

}  // namespace motivol

#endif
