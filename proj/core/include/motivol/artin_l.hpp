#ifndef MOTIVOL_ARTIN_L_HPP
#define MOTIVOL_ARTIN_L_HPP

#include "motivol/cover.hpp"
#include "motivol/rep.hpp"
#include "motivol/series.hpp"

namespace motivol {

// Truncated Artin L-function of an unramified cover:
//   prod_{n<=K} prod_D  P_{rho,{e},D}(t^n)^(-count(D,n)).
TruncatedSeries<Rat> artin_L(const GCover& cover, const MatrixRep& rho, int K);

struct CompatReport {
    struct Item {
        std::string name;
        bool pass;
        std::string detail;
    };
    std::vector<Item> items;
    bool all_pass() const
    {
        for (const auto& i : items)
            if (!i.pass) return false;
        return true;
    }
};

// Direct-sum, quotient, restriction and induction compatibilities for the
// constant-field covers of one base curve, verified exactly to t^K.
CompatReport compat_suite(const CurveCounts& base, int r, int K);

}  // namespace motivol

#endif
