#include "motivol/specialize.hpp"

namespace motivol {

VolumeReport specialize(const MotivicVolume& v, long m, const Rat& q)
{
    if (m < 1) throw error("specialize: m must be >= 1");
    VolumeReport report;
    report.mode = "specialize";

    // condition m > (1/2) log_q(1 + sup b_i): compare q^(2m) with (1+b)^2
    int b = std::max(v.x_profile.max_betti(), v.c_profile.max_betti());
    if (pow_rat(q, 2 * m) <= Rat(1 + b))
        report.warnings.push_back(
            "m <= (1/2) log_q(1 + max Betti): the convergence guarantee at u = -1 lapses; "
            "partial sums stay exact");

    Rat partial = 0;
    const auto& terms = v.series.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        int e = it->first;
        Rat tr = it->second.trace_at(m, q);
        partial += (e % 2 == 0) ? tr : -tr;
        VolumeEntry entry;
        entry.depth = v.leading_exponent - e;
        entry.base = tr;
        entry.exponent = 1;
        entry.factor = tr;
        entry.partial = partial;
        report.entries.push_back(entry);
    }
    report.value = partial;

    // window tail: omitted coefficients sit at exponents below the floor and
    // carry weight-pure traces of size q^(m e / 2); same rational majorant as
    // the classical route
    Rat C = Rat(8) * (v.dim_x + v.x_profile.betti(2) + 1) * (1 + b) * (1 + b);
    Rat ratio(5, 7);
    Rat geo = pow_rat(ratio, static_cast<long>(v.window) + 1) / (1 - ratio);
    report.tail_bound = C * geo * pow_rat(q, (1 - v.genus_c) * v.dim_x);
    return report;
}

Rat bridge_term_base(const MotivicVolume& v, int n, long m, const Rat& q)
{
    int floor = -(2 * n * (v.dim_x + v.x_profile.max_betti() +
                           static_cast<int>(numerator(v.pic.at_element(v.pic.group()->identity())))) +
                  4);
    CohTail term = term_P(v.x_profile, v.pic, n, floor);
    auto deg_low = term.terms().empty() ? 0 : term.terms().begin()->first;
    if (deg_low <= floor)
        throw error("bridge_term_base: term not fully resolved at the probe floor");
    return trace_at_u_minus_one(term, m, q);
}

BigInt bridge_term_exponent(const MotivicVolume& v, int n, long m, const Rat& q)
{
    Rat tr = trace_at_u_minus_one(psi_n(v.c_profile, n), m, q);
    if (!is_integer(tr)) throw error("bridge_term_exponent: psi trace is not an integer");
    return numerator(tr);
}

}  // namespace motivol
