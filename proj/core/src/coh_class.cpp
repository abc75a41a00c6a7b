#include "motivol/coh_class.hpp"

namespace motivol {

CohClass::CohClass(GroupPtr group, TagRegistryPtr registry)
    : group_(std::move(group)), registry_(std::move(registry))
{
    if (!group_) throw error("CohClass: null group");
    if (!registry_) throw error("CohClass: null tag registry");
}

CohClass CohClass::one(GroupPtr group, TagRegistryPtr registry)
{
    return constant(std::move(group), std::move(registry), 1);
}

CohClass CohClass::constant(GroupPtr group, TagRegistryPtr registry, const Rat& c)
{
    CohClass x(group, registry);
    x.add_term(Key{0, {}}, ClassFunction::constant(x.group_, c));
    return x;
}

CohClass CohClass::lefschetz(GroupPtr group, TagRegistryPtr registry, int power)
{
    CohClass x(group, registry);
    x.add_term(Key{power, {}}, ClassFunction::constant(x.group_, 1));
    return x;
}

CohClass CohClass::from_class_function(const ClassFunction& cf, TagRegistryPtr registry, int tate)
{
    CohClass x(cf.group(), std::move(registry));
    x.add_term(Key{tate, {}}, cf);
    return x;
}

CohClass CohClass::from_tag(GroupPtr group, TagRegistryPtr registry, const std::string& name, int tate)
{
    if (!registry->has(name)) throw error("CohClass: unknown tag '" + name + "'");
    CohClass x(group, registry);
    x.add_term(Key{tate, {{name, 1}}}, ClassFunction::constant(x.group_, 1));
    return x;
}

void CohClass::add_term(const Key& key, const ClassFunction& cf)
{
    if (cf.is_zero()) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, cf);
        return;
    }
    ClassFunction sum = it->second + cf;
    if (sum.is_zero())
        terms_.erase(it);
    else
        it->second = sum;
}

void CohClass::require_compatible(const CohClass& o) const
{
    if (group_ != o.group_) throw error("CohClass: group mismatch");
    if (registry_ != o.registry_) throw error("CohClass: tag registry mismatch");
}

bool CohClass::operator==(const CohClass& o) const
{
    return group_ == o.group_ && registry_ == o.registry_ && terms_ == o.terms_;
}

CohClass CohClass::operator+(const CohClass& o) const
{
    require_compatible(o);
    CohClass out = *this;
    for (const auto& [k, cf] : o.terms_) out.add_term(k, cf);
    return out;
}

CohClass CohClass::operator-(const CohClass& o) const
{
    require_compatible(o);
    CohClass out = *this;
    for (const auto& [k, cf] : o.terms_) out.add_term(k, cf.scaled(-1));
    return out;
}

CohClass CohClass::operator*(const CohClass& o) const
{
    require_compatible(o);
    CohClass out(group_, registry_);
    for (const auto& [k1, cf1] : terms_)
        for (const auto& [k2, cf2] : o.terms_) {
            Key k{k1.tate + k2.tate, k1.tags};
            for (const auto& [name, e] : k2.tags) {
                k.tags[name] += e;
                if (k.tags[name] == 0) k.tags.erase(name);
            }
            out.add_term(k, cf1 * cf2);
        }
    return out;
}

CohClass CohClass::scaled(const Rat& c) const
{
    CohClass out(group_, registry_);
    if (c == 0) return out;
    for (const auto& [k, cf] : terms_) out.add_term(k, cf.scaled(c));
    return out;
}

Rat CohClass::trace_at(long m, const Rat& q) const
{
    int frob = group_->frobenius_or_throw();
    int frob_m = group_->power(frob, m);
    Rat acc = 0;
    for (const auto& [k, cf] : terms_) {
        Rat v = cf.at_element(frob_m);
        if (v == 0) continue;
        v *= pow_rat(q, static_cast<long>(k.tate) * m);
        for (const auto& [name, e] : k.tags) {
            if (e < 0) throw error("CohClass::trace_at: negative tag exponent");
            Rat t = registry_->get(name).trace(m);
            v *= pow_rat(t, e);
        }
        acc += v;
    }
    return acc;
}

std::optional<int> CohClass::weight() const
{
    std::optional<int> w;
    for (const auto& [k, cf] : terms_) {
        if (cf.is_zero()) continue;
        int tw = 2 * k.tate;
        for (const auto& [name, e] : k.tags) tw += registry_->get(name).weight * e;
        if (!w || tw > *w) w = tw;
    }
    return w;
}

Rat CohClass::dimension() const
{
    Rat acc = 0;
    for (const auto& [k, cf] : terms_) {
        Rat d = cf.at_element(group_->identity());
        for (const auto& [name, e] : k.tags) d *= pow_rat(Rat(registry_->get(name).dim), e);
        acc += d;
    }
    return acc;
}

CohClass CohClass::lifted_to(const GroupPtr& group) const
{
    if (group == group_) return *this;
    if (group_->order() != 1) throw error("CohClass::lifted_to: source group must be trivial");
    CohClass out(group, registry_);
    for (const auto& [k, cf] : terms_)
        out.add_term(k, ClassFunction::constant(group, cf.at_element(group_->identity())));
    return out;
}

}  // namespace motivol
