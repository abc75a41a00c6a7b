#ifndef MOTIVOL_COVER_HPP
#define MOTIVOL_COVER_HPP

#include "motivol/curve.hpp"
#include "motivol/group.hpp"

#include <functional>

namespace motivol {

// Everywhere-unramified G-cover over a finite field, reduced to its
// decomposition data: for each degree n, the cyclic decomposition subgroups
// of the degree-n closed points of the base and their multiplicities.
class GCover {
public:
    struct Entry {
        std::uint64_t subgroup;  // mask in group()
        BigInt count;
    };

    // D = C x_k k' for k'/k of degree r = |G|; G any cyclic group object
    // carrying its Frobenius generator (defaults to FiniteGroup::cyclic(r)).
    static GCover constant_field(const CurveCounts& base, int r);
    static GCover constant_field(const CurveCounts& base, GroupPtr cyclic_group);

    // Spec(L): zero-dimensional base with explicitly listed closed points
    struct ZeroDimFactor {
        long degree;
        std::uint64_t decomposition;
        BigInt multiplicity = 1;
    };
    static GCover zero_dim(const Rat& q, GroupPtr group, std::vector<ZeroDimFactor> factors);

    // this cover, seen as an H-cover of the intermediate curve D/H (only for
    // constant-field covers); degrees stay measured over the original base
    GCover subcover(std::uint64_t subgroup_mask) const;

    // the induced G-cover of [G:H] disjoint copies, along an embedding of
    // this cover's group into big_group
    GCover induced_to(GroupPtr big_group, const std::vector<int>& embed) const;

    const GroupPtr& group() const { return group_; }
    const Rat& q() const { return q_; }
    const std::string& label() const { return label_; }
    std::vector<Entry> decompositions(long n) const { return entries_(n); }
    bool is_constant_field() const { return base_.has_value(); }
    const CurveCounts& base() const;
    int degree() const { return r_; }

private:
    GCover(GroupPtr group, Rat q, std::function<std::vector<Entry>(long)> entries, std::string label);

    GroupPtr group_;
    Rat q_;
    std::function<std::vector<Entry>(long)> entries_;
    std::string label_;
    std::optional<CurveCounts> base_;
    int r_ = 0;
};

// eta_n(C) * c_n(base) for a subgroup C of the cyclic cover group
BigInt decomposition_count(const GCover& cover, std::uint64_t subgroup_mask, long n);

// closed_points(base, n) when g_F^n lies in the element class, else 0
BigInt artin_symbol_count(const GCover& cover, int element, long n);

}  // namespace motivol

#endif
