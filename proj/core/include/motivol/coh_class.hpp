#ifndef MOTIVOL_COH_CLASS_HPP
#define MOTIVOL_COH_CLASS_HPP

#include "motivol/class_function.hpp"
#include "motivol/motive_tag.hpp"
#include "motivol/ring.hpp"

#include <map>

namespace motivol {

// Element of the coefficient ring: a finite sum of terms
//   (class function on G) * l^j * (registered motive tags).
// The class functions multiply pointwise, Tate exponents add and tag
// multisets merge; the rational coefficient is absorbed into the class
// function, so equal (j, tags) keys always combine.
class CohClass {
public:
    using TagExp = std::map<std::string, int>;
    struct Key {
        int tate;
        TagExp tags;
        bool operator<(const Key& o) const
        {
            if (tate != o.tate) return tate < o.tate;
            return tags < o.tags;
        }
        bool operator==(const Key& o) const { return tate == o.tate && tags == o.tags; }
    };

    CohClass(GroupPtr group, TagRegistryPtr registry);

    static CohClass zero(GroupPtr group, TagRegistryPtr registry) { return CohClass(group, registry); }
    static CohClass one(GroupPtr group, TagRegistryPtr registry);
    static CohClass lefschetz(GroupPtr group, TagRegistryPtr registry, int power = 1);
    static CohClass from_class_function(const ClassFunction& cf, TagRegistryPtr registry, int tate = 0);
    static CohClass from_tag(GroupPtr group, TagRegistryPtr registry, const std::string& name,
                             int tate = 0);
    static CohClass constant(GroupPtr group, TagRegistryPtr registry, const Rat& c);

    const GroupPtr& group() const { return group_; }
    const TagRegistryPtr& registry() const { return registry_; }
    const std::map<Key, ClassFunction>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool operator==(const CohClass& o) const;

    CohClass operator+(const CohClass& o) const;
    CohClass operator-(const CohClass& o) const;
    CohClass operator*(const CohClass& o) const;
    CohClass scaled(const Rat& c) const;

    // Tr(F^m): evaluates class functions at the class of g_F^m, the Lefschetz
    // class at q^(j m) and tags through their trace rules.
    Rat trace_at(long m, const Rat& q) const;

    // max over nonzero terms of 2 j + sum weight(tag) e; zero class -> no weight
    std::optional<int> weight() const;
    // virtual rank: sum cf(identity) * prod dim(tag)^e
    Rat dimension() const;

    // pushes a class on the trivial group onto a larger group (constant cfs)
    CohClass lifted_to(const GroupPtr& group) const;

private:
    void add_term(const Key& key, const ClassFunction& cf);
    void require_compatible(const CohClass& o) const;

    GroupPtr group_;
    TagRegistryPtr registry_;
    std::map<Key, ClassFunction> terms_;
};

template <>
struct ring_ops<CohClass> {
    static CohClass zero(const CohClass& m) { return CohClass::zero(m.group(), m.registry()); }
    static CohClass one(const CohClass& m) { return CohClass::one(m.group(), m.registry()); }
    static CohClass scale(const CohClass& x, const Rat& c) { return x.scaled(c); }
};

}  // namespace motivol

#endif
