#ifndef MOTIVOL_CLASS_FUNCTION_HPP
#define MOTIVOL_CLASS_FUNCTION_HPP

#include "motivol/group.hpp"
#include "motivol/ring.hpp"

#include <optional>
#include <vector>

namespace motivol {

// Q-valued function on the conjugacy classes of a finite group, with the
// pointwise ring structure. Products of virtual rational characters are
// exact class-wise products.
class ClassFunction {
public:
    ClassFunction(GroupPtr group, std::vector<Rat> values);
    static ClassFunction constant(GroupPtr group, const Rat& c);

    const GroupPtr& group() const { return group_; }
    const std::vector<Rat>& values() const { return values_; }
    const Rat& at_class(int c) const { return values_.at(static_cast<size_t>(c)); }
    const Rat& at_element(int g) const { return values_.at(static_cast<size_t>(group_->class_of(g))); }

    bool is_zero() const;
    bool is_constant_one() const;
    // constant on each conjugacy class of generated cyclic subgroups
    bool is_rationally_central() const;

    bool operator==(const ClassFunction& o) const;
    ClassFunction operator+(const ClassFunction& o) const;
    ClassFunction operator-(const ClassFunction& o) const;
    ClassFunction operator*(const ClassFunction& o) const;
    ClassFunction scaled(const Rat& c) const;

    // value on a generator of (a member of) a Conjc class; requires the
    // function to be rationally central so the value is well defined
    Rat at_cyclic_class(int conjc_index) const;

private:
    void require_same_group(const ClassFunction& o) const;

    GroupPtr group_;
    std::vector<Rat> values_;
};

template <>
struct ring_ops<ClassFunction> {
    static ClassFunction zero(const ClassFunction& m) { return ClassFunction::constant(m.group(), 0); }
    static ClassFunction one(const ClassFunction& m) { return ClassFunction::constant(m.group(), 1); }
    static ClassFunction scale(const ClassFunction& x, const Rat& c) { return x.scaled(c); }
};

// theta_C: 1 on elements generating a subgroup in the Conjc class C, else 0.
ClassFunction theta_class(const GroupPtr& group, int conjc_index);

// adams(chi, m)(g) = chi(g^m)
ClassFunction adams(const ClassFunction& chi, long m);

// j-th exterior power character through the Newton recurrence
//   e_j = (1/j) sum_{i=1..j} (-1)^(i-1) e_{j-i} adams(chi, i).
// When genuine_dim is given, j > genuine_dim is rejected.
ClassFunction exterior_char(const ClassFunction& chi, int j,
                            std::optional<int> genuine_dim = std::nullopt);

}  // namespace motivol

#endif
