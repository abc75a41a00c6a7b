#ifndef MOTIVOL_LAURENT_HPP
#define MOTIVOL_LAURENT_HPP

#include "motivol/ring.hpp"

#include <map>
#include <optional>
#include <vector>

namespace motivol {

// Laurent tail in u: sparse exponent -> coefficient map with a floor (lowest
// retained exponent). Everything below the floor is unknown and dropped;
// binary operations re-truncate to the shallower (larger) of the two floors.
template <Ring R>
class LaurentTail {
public:
    LaurentTail(int floor, const R& model) : floor_(floor), model_(ring_ops<R>::zero(model)) {}

    static LaurentTail one(int floor, const R& model)
    {
        LaurentTail t(floor, model);
        t.set(0, ring_ops<R>::one(model));
        return t;
    }

    static LaurentTail monomial(int floor, const R& coeff, int exponent)
    {
        LaurentTail t(floor, coeff);
        t.set(exponent, coeff);
        return t;
    }

    int floor() const { return floor_; }
    const R& model() const { return model_; }
    const std::map<int, R>& terms() const { return c_; }
    bool empty() const { return c_.empty(); }

    // highest exponent carrying a nonzero coefficient
    std::optional<int> degree() const
    {
        if (c_.empty()) return std::nullopt;
        return c_.rbegin()->first;
    }

    R coefficient(int exponent) const
    {
        auto it = c_.find(exponent);
        return it == c_.end() ? model_ : it->second;
    }

    void set(int exponent, const R& value)
    {
        if (exponent < floor_) return;
        if (ring_is_zero(value))
            c_.erase(exponent);
        else
            c_.insert_or_assign(exponent, value);
    }

    LaurentTail with_floor(int new_floor) const
    {
        LaurentTail out(new_floor, model_);
        for (const auto& [e, v] : c_)
            if (e >= new_floor) out.c_.emplace(e, v);
        return out;
    }

    bool operator==(const LaurentTail& o) const { return c_ == o.c_; }

    LaurentTail operator+(const LaurentTail& o) const
    {
        LaurentTail out = with_floor(common_floor(o));
        for (const auto& [e, v] : o.c_) out.set(e, out.coefficient(e) + v);
        return out;
    }

    LaurentTail operator-(const LaurentTail& o) const
    {
        LaurentTail out = with_floor(common_floor(o));
        for (const auto& [e, v] : o.c_) out.set(e, out.coefficient(e) - v);
        return out;
    }

    LaurentTail operator*(const LaurentTail& o) const
    {
        LaurentTail out(common_floor(o), model_);
        for (const auto& [e1, v1] : c_)
            for (const auto& [e2, v2] : o.c_) {
                int e = e1 + e2;
                if (e < out.floor_) continue;
                out.set(e, out.coefficient(e) + v1 * v2);
            }
        return out;
    }

    LaurentTail scaled(const Rat& q) const
    {
        LaurentTail out(floor_, model_);
        if (q == 0) return out;
        for (const auto& [e, v] : c_) out.set(e, ring_ops<R>::scale(v, q));
        return out;
    }

    LaurentTail shifted(int delta) const
    {
        LaurentTail out(floor_ + delta, model_);
        for (const auto& [e, v] : c_) out.c_.emplace(e + delta, v);
        return out;
    }

private:
    int common_floor(const LaurentTail& o) const { return floor_ > o.floor_ ? floor_ : o.floor_; }

    int floor_;
    R model_;
    std::map<int, R> c_;
};

template <Ring R>
struct ring_ops<LaurentTail<R>> {
    static LaurentTail<R> zero(const LaurentTail<R>& m) { return LaurentTail<R>(m.floor(), m.model()); }
    static LaurentTail<R> one(const LaurentTail<R>& m) { return LaurentTail<R>::one(m.floor(), m.model()); }
    static LaurentTail<R> scale(const LaurentTail<R>& x, const Rat& c) { return x.scaled(c); }
};

// log(1 + y) for a tail with y supported in negative exponents. Runs the
// derivative recurrence in the w = u^(-1) grading, so cost is quadratic in
// the window width.
template <Ring R>
LaurentTail<R> laurent_log(const LaurentTail<R>& a)
{
    const R one = ring_ops<R>::one(a.model());
    const R zero = ring_ops<R>::zero(a.model());
    if (!(a.coefficient(0) == one)) throw error("laurent_log: leading coefficient must be 1");
    int width = -a.floor();
    if (width < 0) throw error("laurent_log: floor must be <= 0");
    std::vector<R> y(static_cast<size_t>(width) + 1, zero);
    for (const auto& [e, v] : a.terms()) {
        if (e > 0) throw error("laurent_log: support must lie in exponents <= 0");
        if (e < 0) y[static_cast<size_t>(-e)] = v;
    }
    std::vector<R> L(static_cast<size_t>(width) + 1, zero);
    for (int j = 1; j <= width; ++j) {
        R acc = y[static_cast<size_t>(j)];
        for (int i = 1; i < j; ++i) {
            if (ring_is_zero(L[static_cast<size_t>(i)]) || ring_is_zero(y[static_cast<size_t>(j - i)])) continue;
            acc = acc - ring_ops<R>::scale(L[static_cast<size_t>(i)] * y[static_cast<size_t>(j - i)], Rat(i, j));
        }
        L[static_cast<size_t>(j)] = acc;
    }
    LaurentTail<R> out(a.floor(), a.model());
    for (int j = 1; j <= width; ++j) out.set(-j, L[static_cast<size_t>(j)]);
    return out;
}

// exp(z) for z supported in strictly negative exponents.
template <Ring R>
LaurentTail<R> laurent_exp(const LaurentTail<R>& z)
{
    const R zero = ring_ops<R>::zero(z.model());
    int width = -z.floor();
    if (width < 0) throw error("laurent_exp: floor must be <= 0");
    std::vector<R> zc(static_cast<size_t>(width) + 1, zero);
    for (const auto& [e, v] : z.terms()) {
        if (e >= 0) throw error("laurent_exp: support must lie in exponents < 0");
        zc[static_cast<size_t>(-e)] = v;
    }
    std::vector<R> E(static_cast<size_t>(width) + 1, zero);
    E[0] = ring_ops<R>::one(z.model());
    for (int j = 1; j <= width; ++j) {
        R acc = zero;
        for (int i = 1; i <= j; ++i) {
            if (ring_is_zero(zc[static_cast<size_t>(i)]) || ring_is_zero(E[static_cast<size_t>(j - i)])) continue;
            acc = acc + ring_ops<R>::scale(zc[static_cast<size_t>(i)] * E[static_cast<size_t>(j - i)], Rat(i, j));
        }
        E[static_cast<size_t>(j)] = acc;
    }
    LaurentTail<R> out(z.floor(), z.model());
    out.set(0, E[0]);
    for (int j = 1; j <= width; ++j) out.set(-j, E[static_cast<size_t>(j)]);
    return out;
}

// base^e = exp(e log base) in the u^(-1)-adic ring; the exponent may carry
// bounded nonnegative exponents (a realized psi_n class), the product
// e log(base) must land strictly below exponent 0.
template <Ring R>
LaurentTail<R> laurent_pow(const LaurentTail<R>& base, const LaurentTail<R>& e)
{
    return laurent_exp((e * laurent_log(base)).with_floor(base.floor()));
}

template <Ring R>
LaurentTail<R> laurent_pow(const LaurentTail<R>& base, const R& e)
{
    LaurentTail<R> l = laurent_log(base);
    LaurentTail<R> out(base.floor(), base.model());
    for (const auto& [k, v] : l.terms()) out.set(k, v * e);
    return laurent_exp(out);
}

}  // namespace motivol

#endif
