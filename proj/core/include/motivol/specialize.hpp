#ifndef MOTIVOL_SPECIALIZE_HPP
#define MOTIVOL_SPECIALIZE_HPP

#include "motivol/classical.hpp"
#include "motivol/tamagawa.hpp"

namespace motivol {

// Tr(F^m) on every coefficient, then u = -1: the partial sums over
// increasing truncation depth converge to the classical Tamagawa volume over
// F_{q^m}. Entries are indexed by depth below the leading exponent.
VolumeReport specialize(const MotivicVolume& v, long m, const Rat& q);

// exact value at u = -1 of Tr(F^m | term_P(n)), recomputed at a floor deep
// enough that nothing is cut; the base of the per-term bridge identity
Rat bridge_term_base(const MotivicVolume& v, int n, long m, const Rat& q);

// Tr(F^m) of the realized psi_n class at u = -1; the exponent of the bridge
BigInt bridge_term_exponent(const MotivicVolume& v, int n, long m, const Rat& q);

}  // namespace motivol

#endif
