#include "motivol/profile.hpp"

namespace motivol {

namespace {

// Split an entry into atoms whose exterior powers are known: a character
// piece per (tate, no tags) term, and per-tag copies for single-tag terms
// with constant integer multiplicity.
struct Atom {
    int dim;
    // Lambda^k for 0 <= k <= dim
    std::vector<CohClass> lambda;
};

CohClass tag_terms_to_class(const GroupPtr& G, const TagRegistryPtr& reg,
                            const std::vector<TagTerm>& terms, int extra_tate)
{
    CohClass acc = CohClass::zero(G, reg);
    for (const TagTerm& t : terms) {
        CohClass piece = CohClass::lefschetz(G, reg, t.tate + extra_tate).scaled(t.coef);
        for (const auto& [name, e] : t.tags)
            for (int k = 0; k < e; ++k) piece = piece * CohClass::from_tag(G, reg, name);
        acc = acc + piece;
    }
    return acc;
}

std::vector<Atom> decompose(const CohClass& entry)
{
    const GroupPtr& G = entry.group();
    const TagRegistryPtr& reg = entry.registry();
    std::vector<Atom> atoms;
    for (const auto& [key, cf] : entry.terms()) {
        if (key.tags.empty()) {
            // character piece chi * l^a: Lambda^k = (Lambda^k chi) * l^(k a)
            Rat d = cf.at_element(G->identity());
            if (!is_integer(d) || d < 0)
                throw error("exterior power: entry piece has non-integral rank");
            int dim = static_cast<int>(numerator(d));
            if (dim == 0) {
                if (!cf.is_zero()) throw error("exterior power: rank-0 piece with nonzero character");
                continue;
            }
            Atom a;
            a.dim = dim;
            for (int k = 0; k <= dim; ++k)
                a.lambda.push_back(
                    CohClass::from_class_function(exterior_char(cf, k, dim), reg, k * key.tate));
            atoms.push_back(std::move(a));
            continue;
        }
        // tag piece: single tag, exponent 1, constant integer multiplicity
        if (key.tags.size() != 1 || key.tags.begin()->second != 1)
            throw error("exterior power: entry mixes tags beyond the registered tables");
        if (!cf.is_rationally_central())
            throw error("exterior power: tag piece with non-central coefficient");
        Rat mult = cf.at_element(G->identity());
        for (int g = 0; g < G->order(); ++g)
            if (cf.at_element(g) != mult)
                throw error("exterior power: tag piece twisted by a nontrivial character");
        if (!is_integer(mult) || mult < 0) throw error("exterior power: tag multiplicity not a nonnegative integer");
        const MotiveTag& tag = reg->get(key.tags.begin()->first);
        Atom model;
        model.dim = tag.dim;
        for (int k = 0; k <= tag.dim; ++k)
            model.lambda.push_back(tag_terms_to_class(G, reg, tag.exterior[static_cast<size_t>(k)],
                                                      k * key.tate));
        long copies = static_cast<long>(numerator(mult));
        for (long c = 0; c < copies; ++c) atoms.push_back(model);
    }
    return atoms;
}

}  // namespace

CohProfile::CohProfile(GroupPtr group, TagRegistryPtr registry, int dim,
                       std::map<int, CohClass> entries, std::optional<int> genus, std::string label)
    : group_(std::move(group)),
      registry_(std::move(registry)),
      dim_(dim),
      genus_(genus),
      label_(std::move(label)),
      h_(std::move(entries))
{
    if (dim_ < 0) throw error("CohProfile: negative dimension");
    for (const auto& [i, cls] : h_) {
        if (i < 0 || i > 2 * dim_) throw error("CohProfile: cohomological degree out of range");
        if (cls.group() != group_ || cls.registry() != registry_)
            throw error("CohProfile: entry over a different group or registry");
        auto w = cls.weight();
        if (w && *w != i) throw error("CohProfile: weight purity fails in degree " + std::to_string(i));
        Rat d = cls.dimension();
        if (!is_integer(d) || d < 0) throw error("CohProfile: Betti number must be a nonnegative integer");
    }
}

int CohProfile::betti(int i) const
{
    auto it = h_.find(i);
    if (it == h_.end()) return 0;
    return static_cast<int>(numerator(it->second.dimension()));
}

int CohProfile::max_betti() const
{
    int b = 0;
    for (const auto& [i, cls] : h_) b = std::max(b, betti(i));
    return b;
}

const CohClass& CohProfile::entry(int i) const
{
    auto it = h_.find(i);
    if (it == h_.end()) throw error("CohProfile: no entry in degree " + std::to_string(i));
    return it->second;
}

CohClass CohProfile::exterior(int i, int j) const
{
    if (j == 0) return CohClass::one(group_, registry_);
    if (!has_entry(i)) {
        if (j > 0) throw error("CohProfile: exterior power of a missing entry");
        return CohClass::zero(group_, registry_);
    }
    int b = betti(i);
    if (j < 0 || j > b) throw error("CohProfile: exterior power out of range");
    std::vector<Atom> atoms = decompose(entry(i));
    // fold Lambda(A (+) B) = Lambda(A) * Lambda(B) as a convolution up to j
    std::vector<CohClass> acc{CohClass::one(group_, registry_)};
    for (const Atom& a : atoms) {
        std::vector<CohClass> next(std::min<size_t>(acc.size() + static_cast<size_t>(a.dim), static_cast<size_t>(j) + 1),
                                   CohClass::zero(group_, registry_));
        for (size_t s = 0; s < acc.size(); ++s)
            for (int k = 0; k <= a.dim && s + static_cast<size_t>(k) < next.size(); ++k)
                next[s + static_cast<size_t>(k)] =
                    next[s + static_cast<size_t>(k)] + acc[s] * a.lambda[static_cast<size_t>(k)];
        acc = std::move(next);
    }
    if (static_cast<size_t>(j) >= acc.size()) return CohClass::zero(group_, registry_);
    return acc[static_cast<size_t>(j)];
}

CohProfile CohProfile::point(GroupPtr group, TagRegistryPtr registry)
{
    std::map<int, CohClass> h;
    h.emplace(0, CohClass::one(group, registry));
    return CohProfile(group, registry, 0, std::move(h), std::nullopt, "point");
}

CohProfile CohProfile::projective_space(GroupPtr group, TagRegistryPtr registry, int d)
{
    if (d < 0) throw error("projective_space: negative dimension");
    std::map<int, CohClass> h;
    for (int j = 0; j <= d; ++j) h.emplace(2 * j, CohClass::lefschetz(group, registry, j));
    return CohProfile(group, registry, d, std::move(h), d == 1 ? std::optional<int>(0) : std::nullopt,
                      "p" + std::to_string(d));
}

CohProfile CohProfile::p1(GroupPtr group, TagRegistryPtr registry)
{
    return projective_space(std::move(group), std::move(registry), 1);
}

CohProfile CohProfile::genus1_curve(GroupPtr group, const std::shared_ptr<TagRegistry>& registry,
                                    const Rat& a, const Rat& q)
{
    std::string name = genus1_h1_name(a, q);
    if (!registry->has(name)) registry->add(genus1_h1_tag(a, q), q);
    std::map<int, CohClass> h;
    h.emplace(0, CohClass::one(group, registry));
    h.emplace(1, CohClass::from_tag(group, registry, name));
    h.emplace(2, CohClass::lefschetz(group, registry, 1));
    return CohProfile(group, registry, 1, std::move(h), 1,
                      "elliptic(a=" + rat_to_string(a) + ",q=" + rat_to_string(q) + ")");
}

CohProfile CohProfile::quadric_swap(GroupPtr z2, TagRegistryPtr registry)
{
    if (z2->order() != 2) throw error("quadric_swap: needs the group Z/2");
    std::map<int, CohClass> h;
    h.emplace(0, CohClass::one(z2, registry));
    ClassFunction reg_char(z2, {Rat(2), Rat(0)});
    h.emplace(2, CohClass::from_class_function(reg_char, registry, 1));
    h.emplace(4, CohClass::lefschetz(z2, registry, 2));
    return CohProfile(z2, registry, 2, std::move(h), std::nullopt, "quadric-swap");
}

CohProfile CohProfile::kunneth_product(const CohProfile& a, const CohProfile& b)
{
    if (a.group() != b.group() || a.registry() != b.registry())
        throw error("kunneth_product: profiles over different groups or registries");
    std::map<int, CohClass> h;
    for (const auto& [i, ci] : a.entries())
        for (const auto& [j, cj] : b.entries()) {
            CohClass prod = ci * cj;
            auto it = h.find(i + j);
            if (it == h.end())
                h.emplace(i + j, prod);
            else
                it->second = it->second + prod;
        }
    return CohProfile(a.group(), a.registry(), a.dim() + b.dim(), std::move(h), std::nullopt,
                      a.label() + "x" + b.label());
}

CohProfile CohProfile::lifted_to(const GroupPtr& group) const
{
    if (group == group_) return *this;
    std::map<int, CohClass> h;
    for (const auto& [i, cls] : h_) h.emplace(i, cls.lifted_to(group));
    return CohProfile(group, registry_, dim_, std::move(h), genus_, label_);
}

}  // namespace motivol
