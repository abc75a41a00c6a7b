#include "motivol/cover.hpp"

#include "motivol/eta.hpp"
#include "motivol/numtheory.hpp"

namespace motivol {

GCover::GCover(GroupPtr group, Rat q, std::function<std::vector<Entry>(long)> entries,
               std::string label)
    : group_(std::move(group)), q_(std::move(q)), entries_(std::move(entries)), label_(std::move(label))
{
}

GCover GCover::constant_field(const CurveCounts& base, int r)
{
    return constant_field(base, FiniteGroup::cyclic(r));
}

GCover GCover::constant_field(const CurveCounts& base, GroupPtr cyclic_group)
{
    const FiniteGroup& G = *cyclic_group;
    int frob = G.frobenius_or_throw();
    if (G.element_order(frob) != G.order())
        throw error("constant_field: Frobenius must generate the (cyclic) cover group");
    GroupPtr group = cyclic_group;
    auto entries = [base, group, frob](long n) {
        // a degree-n point has decomposition <g_F^n>
        std::uint64_t d = group->subgroup_generated({group->power(frob, n)});
        return std::vector<Entry>{Entry{d, base.closed_points(n)}};
    };
    GCover cov(cyclic_group, base.q(), entries,
               base.label() + " x deg-" + std::to_string(G.order()) + " cover");
    cov.base_ = base;
    cov.r_ = G.order();
    return cov;
}

GCover GCover::zero_dim(const Rat& q, GroupPtr group, std::vector<ZeroDimFactor> factors)
{
    for (const auto& f : factors) {
        if (f.degree < 1) throw error("zero_dim: factor degree must be >= 1");
        if (!group->is_subgroup(f.decomposition))
            throw error("zero_dim: decomposition is not a subgroup");
        // cyclic check: some element generates it
        bool cyclic = false;
        for (int g : group->elements_of(f.decomposition))
            if (group->subgroup_generated({g}) == f.decomposition) cyclic = true;
        if (!cyclic) throw error("zero_dim: decomposition group must be cyclic");
    }
    auto entries = [factors](long n) {
        std::vector<Entry> out;
        for (const auto& f : factors)
            if (f.degree == n) out.push_back(Entry{f.decomposition, f.multiplicity});
        return out;
    };
    return GCover(std::move(group), q, entries, "zero-dim cover");
}

GCover GCover::subcover(std::uint64_t subgroup_mask) const
{
    if (!base_) throw error("subcover: only available for constant-field covers");
    const FiniteGroup& G = *group_;
    if (!G.is_subgroup(subgroup_mask)) throw error("subcover: not a subgroup");
    int h = FiniteGroup::mask_order(subgroup_mask);
    long s = G.order() / h;
    int frob = G.frobenius_or_throw();
    int frob_s = G.power(frob, s);
    if (G.subgroup_generated({frob_s}) != subgroup_mask)
        throw error("subcover: subgroup is not generated by g_F^s");
    auto H = G.subgroup_group(subgroup_mask, frob_s);
    CurveCounts mid = base_->base_change(s);  // the curve D/H over F_{q^s}
    GroupPtr Hg = H.group;
    int frob_h = Hg->frobenius_or_throw();
    auto entries = [mid, Hg, frob_h, s](long n) {
        // degrees are over the original base field: only multiples of s occur
        if (n % s != 0) return std::vector<Entry>{};
        long np = n / s;
        std::uint64_t d = Hg->subgroup_generated({Hg->power(frob_h, np)});
        return std::vector<Entry>{Entry{d, mid.closed_points(np)}};
    };
    GCover cov(Hg, base_->q(), entries, label_ + " / H of order " + std::to_string(h));
    cov.base_ = mid;
    cov.r_ = h;
    return cov;
}

GCover GCover::induced_to(GroupPtr big_group, const std::vector<int>& embed) const
{
    if (static_cast<int>(embed.size()) != group_->order())
        throw error("induced_to: embedding size mismatch");
    auto inner = entries_;
    GroupPtr big = big_group;
    auto entries = [inner, big, embed](long n) {
        std::vector<Entry> out;
        for (const Entry& e : inner(n)) {
            std::uint64_t mapped = 0;
            for (int i = 0; i < 64; ++i)
                if (e.subgroup & (std::uint64_t{1} << i))
                    mapped |= std::uint64_t{1} << embed.at(static_cast<size_t>(i));
            out.push_back(Entry{mapped, e.count});
        }
        return out;
    };
    return GCover(std::move(big_group), q_, entries, label_ + " induced");
}

const CurveCounts& GCover::base() const
{
    if (!base_) throw error("GCover: cover has no base curve");
    return *base_;
}

BigInt decomposition_count(const GCover& cover, std::uint64_t subgroup_mask, long n)
{
    if (!cover.group()->is_subgroup(subgroup_mask))
        throw error("decomposition_count: not a subgroup");
    if (eta_indicator(cover.degree(), FiniteGroup::mask_order(subgroup_mask), n) == 0) return 0;
    return cover.base().closed_points(n);
}

BigInt artin_symbol_count(const GCover& cover, int element, long n)
{
    const FiniteGroup& G = *cover.group();
    if (element < 0 || element >= G.order()) throw error("artin_symbol_count: element out of range");
    int frob_n = G.power(G.frobenius_or_throw(), n);
    if (G.class_of(frob_n) != G.class_of(element)) return 0;
    return cover.base().closed_points(n);
}

}  // namespace motivol
