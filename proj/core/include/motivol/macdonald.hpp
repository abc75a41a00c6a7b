#ifndef MOTIVOL_MACDONALD_HPP
#define MOTIVOL_MACDONALD_HPP

#include "motivol/laurent.hpp"
#include "motivol/profile.hpp"
#include "motivol/series.hpp"

namespace motivol {

using CohTail = LaurentTail<CohClass>;
using CohTailSeries = TruncatedSeries<CohTail>;

// sum_i [H^i] u^i
CohTail poincare(const CohProfile& p);

// Poincare image of the motivic zeta series, as the quotient of the
// odd-degree exterior product by the even-degree alternating product,
// truncated at t^K.
CohTailSeries macdonald_zeta(const CohProfile& p, int K);

// realization of the n-th Adams class:
//   sum_i (-1)^((n+1) i) newton_power_sum([Lambda^j H^i]_j, n) u^(n i).
// The n-th dlog coefficient of macdonald_zeta recovers exactly this.
CohTail phi_n(const CohProfile& p, int n);

// Moebius inversion (1/n) sum_{d|n} mu(n/d) phi_d
CohTail psi_n(const CohProfile& p, int n);

// Tr(F^m) on every coefficient, then u = -1
Rat trace_at_u_minus_one(const CohTail& t, long m, const Rat& q);

}  // namespace motivol

#endif
