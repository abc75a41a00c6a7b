#ifndef MOTIVOL_TAMAGAWA_HPP
#define MOTIVOL_TAMAGAWA_HPP

#include "motivol/macdonald.hpp"

namespace motivol {

// Degree-bound data for one Euler term: deg_u(term - 1) <= -3n and
// deg_u(Poinc psi_n(C)) <= 2n. The two together make the infinite product
// converge in the Poincare-degree completion.
struct TermCertificate {
    int n;
    int term_degree;  // max exponent of term - 1 (term_degree <= bound required)
    int psi_degree;
    int bound;  // -3n
    bool pass;
};

// Truncated motivic Tamagawa volume of X x C / C: a Laurent tail with
// CohClass coefficients, exact on the retained window, plus the inputs
// needed to re-derive per-term data.
struct MotivicVolume {
    CohTail series;        // floor = leading_exponent - window
    int leading_exponent;  // 2 (1 - g) dim X
    int window;
    int dim_x = 0;
    int genus_c = 0;
    int extension_degree = 1;
    CohProfile x_profile;
    CohProfile c_profile;
    ClassFunction pic;
    std::vector<TermCertificate> certificates;
};

// One Euler term at depth n, computed at the given floor:
//   prod_C P_{pic,{e},C}(l^-n u^-2n)^{eta(C,n)} * phi_n(X) l^(-n dim) u^(-2n dim).
// The profile must satisfy the constant-family hypotheses: b1(X) = 0 and
// [H^(2 dim - 2)] = pic * l^(dim - 1).
CohTail term_P(const CohProfile& x, const ClassFunction& pic, int n, int floor);

// The volume as the truncated Euler product; terms above n = window cannot
// touch the retained window (net degree of term n is below -n).
MotivicVolume motivic_volume(const CohProfile& x, const ClassFunction& pic, const CohProfile& c,
                             int extension_degree, int window, int threads = 1);

struct DegreeCertReport {
    std::vector<TermCertificate> terms;
    bool pass = true;
};

// re-derives the per-term degree bounds (up to max_n) for the volume inputs
DegreeCertReport degree_certificate(const MotivicVolume& v, int max_n);

}  // namespace motivol

#endif
