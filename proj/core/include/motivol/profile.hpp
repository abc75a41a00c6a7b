#ifndef MOTIVOL_PROFILE_HPP
#define MOTIVOL_PROFILE_HPP

#include "motivol/coh_class.hpp"

#include <map>

namespace motivol {

// Cohomology profile of a smooth projective variety: for each degree i the
// class of H^i with its Betti number, plus enough data to form exterior
// powers Lambda^j H^i. Weight purity (weight H^i = i) and the Betti/rank
// match are checked on construction.
class CohProfile {
public:
    CohProfile(GroupPtr group, TagRegistryPtr registry, int dim,
               std::map<int, CohClass> entries, std::optional<int> genus = std::nullopt,
               std::string label = {});

    static CohProfile point(GroupPtr group, TagRegistryPtr registry);
    static CohProfile projective_space(GroupPtr group, TagRegistryPtr registry, int d);
    static CohProfile p1(GroupPtr group, TagRegistryPtr registry);
    // genus-1 curve with Frobenius trace a over F_q; registers its H^1 tag
    // into the supplied mutable registry before the profile is built
    static CohProfile genus1_curve(GroupPtr group, const std::shared_ptr<TagRegistry>& registry,
                                   const Rat& a, const Rat& q);
    // the quadratic-twist quadric: H^2 carries the regular character of Z/2
    static CohProfile quadric_swap(GroupPtr z2, TagRegistryPtr registry);

    static CohProfile kunneth_product(const CohProfile& a, const CohProfile& b);

    const GroupPtr& group() const { return group_; }
    const TagRegistryPtr& registry() const { return registry_; }
    int dim() const { return dim_; }
    std::optional<int> genus() const { return genus_; }
    const std::string& label() const { return label_; }
    const std::map<int, CohClass>& entries() const { return h_; }

    int betti(int i) const;
    int max_betti() const;
    const CohClass& entry(int i) const;
    bool has_entry(int i) const { return h_.count(i) != 0; }

    // [Lambda^j H^i]; throws when the entry mixes tags in a way the tables
    // cannot resolve
    CohClass exterior(int i, int j) const;

    CohProfile lifted_to(const GroupPtr& group) const;

private:
    GroupPtr group_;
    TagRegistryPtr registry_;
    int dim_ = 0;
    std::optional<int> genus_;
    std::string label_;
    std::map<int, CohClass> h_;
};

}  // namespace motivol

#endif
