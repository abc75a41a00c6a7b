#ifndef MOTIVOL_POLYNOMIAL_HPP
#define MOTIVOL_POLYNOMIAL_HPP

#include "motivol/ring.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

namespace motivol {

// Sparse polynomial over Q in variables T1..Tn. Only used as the on-demand
// coefficient ring for the Newton polynomials, so the feature set is minimal.
class MultiPoly {
public:
    using Monomial = std::vector<int>;  // exponent per variable

    MultiPoly() = default;

    static MultiPoly constant(const Rat& c)
    {
        MultiPoly p;
        if (c != 0) p.terms_[Monomial{}] = c;
        return p;
    }

    static MultiPoly variable(int index, int nvars)
    {
        Monomial m(static_cast<size_t>(nvars), 0);
        m.at(static_cast<size_t>(index)) = 1;
        MultiPoly p;
        p.terms_[m] = 1;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rat>& terms() const { return terms_; }

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

    MultiPoly operator+(const MultiPoly& o) const
    {
        MultiPoly out = *this;
        for (const auto& [m, c] : o.terms_) out.add_term(m, c);
        return out;
    }

    MultiPoly operator-(const MultiPoly& o) const
    {
        MultiPoly out = *this;
        for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
        return out;
    }

    MultiPoly operator*(const MultiPoly& o) const
    {
        MultiPoly out;
        for (const auto& [m1, c1] : terms_)
            for (const auto& [m2, c2] : o.terms_) out.add_term(merge(m1, m2), c1 * c2);
        return out;
    }

    MultiPoly scaled(const Rat& c) const
    {
        MultiPoly out;
        if (c == 0) return out;
        for (const auto& [m, k] : terms_) out.terms_[m] = k * c;
        return out;
    }

    // Substitute ring values for the variables.
    template <Ring R>
    R evaluate(const std::vector<R>& values, const R& model) const
    {
        R acc = ring_ops<R>::zero(model);
        for (const auto& [m, c] : terms_) {
            R term = ring_ops<R>::one(model);
            for (size_t i = 0; i < m.size(); ++i)
                for (int k = 0; k < m[i]; ++k) term = term * values.at(i);
            acc = acc + ring_ops<R>::scale(term, c);
        }
        return acc;
    }

    // Renders e.g. "2*T2 - T1^2". Higher variables print first.
    std::string str() const
    {
        if (terms_.empty()) return "0";
        std::vector<std::pair<Monomial, Rat>> ts(terms_.begin(), terms_.end());
        std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
            const Monomial &ma = a.first, &mb = b.first;
            size_t n = std::max(ma.size(), mb.size());
            for (size_t i = n; i-- > 0;) {
                int ea = i < ma.size() ? ma[i] : 0;
                int eb = i < mb.size() ? mb[i] : 0;
                if (ea != eb) return ea > eb;
            }
            return false;
        });
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : ts) {
            Rat a = c;
            if (first) {
                if (a < 0) {
                    os << "-";
                    a = -a;
                }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            bool has_vars = std::any_of(m.begin(), m.end(), [](int e) { return e > 0; });
            if (a != 1 || !has_vars) {
                os << rat_to_string(a);
                if (has_vars) os << "*";
            }
            bool first_var = true;
            for (size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                if (!first_var) os << "*";
                first_var = false;
                os << "T" << (i + 1);
                if (m[i] > 1) os << "^" << m[i];
            }
        }
        return os.str();
    }

private:
    static Monomial merge(const Monomial& a, const Monomial& b)
    {
        Monomial m(std::max(a.size(), b.size()), 0);
        for (size_t i = 0; i < a.size(); ++i) m[i] += a[i];
        for (size_t i = 0; i < b.size(); ++i) m[i] += b[i];
        return m;
    }

    void add_term(const Monomial& m, const Rat& c)
    {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (c != 0) terms_[m] = c;
            return;
        }
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }

    std::map<Monomial, Rat> terms_;
};

template <>
struct ring_ops<MultiPoly> {
    static MultiPoly zero(const MultiPoly&) { return MultiPoly(); }
    static MultiPoly one(const MultiPoly&) { return MultiPoly::constant(1); }
    static MultiPoly scale(const MultiPoly& x, const Rat& c) { return x.scaled(c); }
};

}  // namespace motivol

#endif
