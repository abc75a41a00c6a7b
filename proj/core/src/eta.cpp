#include "motivol/eta.hpp"

#include "motivol/numtheory.hpp"

namespace motivol {

std::vector<int> eta_support(const GroupPtr& group, int conjc_index, long n)
{
    if (n < 1) throw error("eta_support: n must be >= 1");
    if (conjc_index < 0 || conjc_index >= group->cyclic_class_count())
        throw error("eta_support: class index out of range");
    const FiniteGroup& G = *group;
    const auto& members = G.cyclic_classes()[static_cast<size_t>(conjc_index)];
    std::vector<int> support;
    for (int d = 0; d < G.cyclic_class_count(); ++d) {
        std::uint64_t D = G.cyclic_class_representative(d);
        long orderD = FiniteGroup::mask_order(D);
        long target = orderD / gcd_long(orderD, n);
        bool hit = false;
        for (std::uint64_t C : members) {
            if ((C & D) != C) continue;  // C < D
            if (FiniteGroup::mask_order(C) == target) {
                hit = true;
                break;
            }
        }
        if (hit) support.push_back(d);
    }
    return support;
}

ClassFunction eta_class(const GroupPtr& group, int conjc_index, long n)
{
    ClassFunction acc = ClassFunction::constant(group, 0);
    for (int d : eta_support(group, conjc_index, n)) acc = acc + theta_class(group, d);
    return acc;
}

int eta_indicator(long extension_degree, long subgroup_order, long n)
{
    if (extension_degree < 1 || n < 1) throw error("eta_indicator: arguments must be >= 1");
    if (subgroup_order < 1 || extension_degree % subgroup_order != 0)
        throw error("eta_indicator: |C| does not divide the extension degree");
    return subgroup_order == extension_degree / gcd_long(n, extension_degree) ? 1 : 0;
}

}  // namespace motivol
