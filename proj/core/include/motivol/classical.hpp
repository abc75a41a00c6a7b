#ifndef MOTIVOL_CLASSICAL_HPP
#define MOTIVOL_CLASSICAL_HPP

#include "motivol/cover.hpp"
#include "motivol/rep.hpp"

#include <functional>

namespace motivol {

// Point-count data of the fiber X: |X(F_{q^n})| with the structural numbers
// needed for tail estimates.
struct FiberCounts {
    std::string label;
    int dim = 0;
    int b2 = 0;
    int max_betti = 1;
    std::function<BigInt(long)> counts;  // n -> |X(F_{q^n})|

    static FiberCounts p2(const Rat& q);
    static FiberCounts p1(const Rat& q);
    static FiberCounts p1xp1(const Rat& q);
    static FiberCounts quadric_swap(const Rat& q);        // q^{2n} + 2 [n even] q^n + 1
    static FiberCounts split_quadric(const Rat& q);       // (q^n + 1)^2
    static FiberCounts from_counts(std::string label, int dim, int b2, int max_betti,
                                   std::vector<BigInt> values);
};

// One factor of the classical Euler product, exact:
//   A_n = prod_C P_{rho,{e},C}(q^-n)^{eta_n(C)} * |X(F_{q^n})| / q^(n dim),
// raised to the number of degree-n closed points of the base curve. The full
// power A_n^(c_n) is astronomically large, so cumulative values use the
// binomial expansion cut at the reported window, with the cut error folded
// into the tail bound.
struct VolumeEntry {
    long depth = 0;
    Rat base;          // A_n
    BigInt exponent;   // c_n
    Rat factor;        // windowed value of A_n^(c_n)
    Rat partial;       // windowed cumulative value through this depth
};

struct VolumeReport {
    std::string mode;
    std::vector<VolumeEntry> entries;
    Rat value;       // final windowed value
    Rat tail_bound;  // Euler tail + windowing error, rigorous overestimate
    std::vector<std::string> certificates;
    std::vector<std::string> warnings;
};

VolumeReport classical_volume(const FiberCounts& x, const CurveCounts& curve, int r,
                              const MatrixRep& rho_ns, int depth, int window);

}  // namespace motivol

#endif
