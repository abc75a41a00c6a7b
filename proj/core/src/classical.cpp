#include "motivol/classical.hpp"

#include "motivol/eta.hpp"

namespace motivol {

FiberCounts FiberCounts::p2(const Rat& q)
{
    BigInt qi = numerator(q);
    return {"p2", 2, 1, 1, [qi](long n) {
                BigInt s = pow_big(qi, static_cast<unsigned long>(n));
                return s * s + s + 1;
            }};
}

FiberCounts FiberCounts::p1(const Rat& q)
{
    BigInt qi = numerator(q);
    return {"p1", 1, 1, 1,
            [qi](long n) { return pow_big(qi, static_cast<unsigned long>(n)) + 1; }};
}

FiberCounts FiberCounts::p1xp1(const Rat& q)
{
    BigInt qi = numerator(q);
    return {"p1xp1", 2, 2, 2, [qi](long n) {
                BigInt s = pow_big(qi, static_cast<unsigned long>(n)) + 1;
                return s * s;
            }};
}

FiberCounts FiberCounts::quadric_swap(const Rat& q)
{
    BigInt qi = numerator(q);
    return {"quadric-swap", 2, 2, 2, [qi](long n) {
                BigInt s = pow_big(qi, static_cast<unsigned long>(n));
                BigInt even = (n % 2 == 0) ? 2 * s : BigInt(0);
                return s * s + even + 1;
            }};
}

FiberCounts FiberCounts::split_quadric(const Rat& q)
{
    BigInt qi = numerator(q);
    return {"split-quadric", 2, 2, 2, [qi](long n) {
                BigInt s = pow_big(qi, static_cast<unsigned long>(n)) + 1;
                return s * s;
            }};
}

FiberCounts FiberCounts::from_counts(std::string label, int dim, int b2, int max_betti,
                                     std::vector<BigInt> values)
{
    return {std::move(label), dim, b2, max_betti, [values](long n) {
                if (n < 1 || n > static_cast<long>(values.size()))
                    throw error("FiberCounts: |X(F_{q^n})| not available for n=" + std::to_string(n));
                return values[static_cast<size_t>(n - 1)];
            }};
}

namespace {

Rat rat_abs(const Rat& x) { return x < 0 ? -x : x; }

// windowed (1 + d)^c = sum_k binom(c,k) d^k, cut once the terms drop below
// the cutoff with a certified geometric tail; adds the cut bound to err
Rat windowed_power(const Rat& d, const BigInt& c, const Rat& cutoff, Rat& err)
{
    Rat sum = 1;
    Rat term = 1;
    BigInt k = 0;
    while (true) {
        // term_{k+1} = term_k * (c - k)/(k + 1) * d
        Rat ratio = Rat(c - k) * d / Rat(k + 1);
        term *= ratio;
        k += 1;
        if (term == 0) return sum;
        Rat a = rat_abs(term);
        if (a < cutoff) {
            // |next/current| = |(c-k) d / (k+1)|; stop when it certifies decay
            Rat next_ratio = rat_abs(Rat(c - k) * d / Rat(k + 1));
            if (next_ratio <= Rat(1, 2)) {
                err += 2 * a;
                return sum;
            }
        }
        sum += term;
        if (k > 4096) throw error("windowed_power: expansion failed to converge");
    }
}

}  // namespace

VolumeReport classical_volume(const FiberCounts& x, const CurveCounts& curve, int r,
                              const MatrixRep& rho_ns, int depth, int window)
{
    if (depth < 1) throw error("classical_volume: depth must be >= 1");
    const GroupPtr& G = rho_ns.group();
    if (G->order() != r) throw error("classical_volume: |G| != r");
    const Rat& q = curve.q();
    std::uint64_t e_mask = G->subgroup_generated({G->identity()});

    // characteristic polynomials per cyclic subgroup, matrix route
    std::vector<std::pair<std::uint64_t, std::vector<Rat>>> polys;
    for (int c = 0; c < G->cyclic_class_count(); ++c) {
        std::uint64_t mask = G->cyclic_class_representative(c);
        polys.emplace_back(mask, char_poly_P(rho_ns, e_mask, mask));
    }

    VolumeReport report;
    report.mode = "classical";
    Rat cutoff = pow_rat(q, -(static_cast<long>(window) + 10));
    Rat window_err = 0;
    Rat partial = pow_rat(q, static_cast<long>(1 - curve.genus()) * x.dim);
    for (long n = 1; n <= depth; ++n) {
        Rat qn = pow_rat(q, -n);
        Rat a = Rat(x.counts(n)) * pow_rat(q, -n * x.dim);
        for (const auto& [mask, poly] : polys) {
            if (eta_indicator(r, FiniteGroup::mask_order(mask), n) == 0) continue;
            Rat value = 0;
            for (size_t j = poly.size(); j-- > 0;) value = value * qn + poly[j];
            a *= value;
        }
        BigInt c_n = curve.closed_points(n);
        Rat factor = windowed_power(a - 1, c_n, cutoff, window_err);
        partial *= factor;
        report.entries.push_back(VolumeEntry{n, a, c_n, factor, partial});
    }
    report.value = partial;

    // Euler tail past the computed depth: |log A_n^(c_n)| is at most
    // c_n C q^(-3n/2) with C from the Weil/purity bounds; q^(-n/2) <= (5/7)^n
    // keeps the estimate rational.
    Rat C = Rat(4) * (x.dim + x.b2) * (1 + x.max_betti) * (1 + x.max_betti);
    Rat ratio(5, 7);
    Rat geo = pow_rat(ratio, depth + 1) / (1 - ratio);
    Rat tail_log = C * Rat(4) / depth * geo;  // c_n <= 2 q^n / n and q^(-3n/2) q^n = q^(-n/2)
    report.tail_bound = 2 * rat_abs(partial) * (tail_log + 2 * window_err);
    return report;
}

}  // namespace motivol
