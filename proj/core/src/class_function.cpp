#include "motivol/class_function.hpp"

namespace motivol {

ClassFunction::ClassFunction(GroupPtr group, std::vector<Rat> values)
    : group_(std::move(group)), values_(std::move(values))
{
    if (!group_) throw error("ClassFunction: null group");
    if (static_cast<int>(values_.size()) != group_->class_count())
        throw error("ClassFunction: value count does not match class count");
}

ClassFunction ClassFunction::constant(GroupPtr group, const Rat& c)
{
    if (!group) throw error("ClassFunction: null group");
    std::vector<Rat> v(static_cast<size_t>(group->class_count()), c);
    return ClassFunction(std::move(group), std::move(v));
}

bool ClassFunction::is_zero() const
{
    for (const Rat& v : values_)
        if (v != 0) return false;
    return true;
}

bool ClassFunction::is_constant_one() const
{
    for (const Rat& v : values_)
        if (v != 1) return false;
    return true;
}

bool ClassFunction::is_rationally_central() const
{
    const FiniteGroup& G = *group_;
    for (int c = 0; c < G.cyclic_class_count(); ++c) {
        std::optional<Rat> seen;
        for (int g = 0; g < G.order(); ++g) {
            if (G.cyclic_class_of_element(g) != c) continue;
            if (!seen)
                seen = at_element(g);
            else if (*seen != at_element(g))
                return false;
        }
    }
    return true;
}

void ClassFunction::require_same_group(const ClassFunction& o) const
{
    if (group_ != o.group_) throw error("ClassFunction: group mismatch");
}

bool ClassFunction::operator==(const ClassFunction& o) const
{
    return group_ == o.group_ && values_ == o.values_;
}

ClassFunction ClassFunction::operator+(const ClassFunction& o) const
{
    require_same_group(o);
    std::vector<Rat> v = values_;
    for (size_t i = 0; i < v.size(); ++i) v[i] += o.values_[i];
    return ClassFunction(group_, std::move(v));
}

ClassFunction ClassFunction::operator-(const ClassFunction& o) const
{
    require_same_group(o);
    std::vector<Rat> v = values_;
    for (size_t i = 0; i < v.size(); ++i) v[i] -= o.values_[i];
    return ClassFunction(group_, std::move(v));
}

ClassFunction ClassFunction::operator*(const ClassFunction& o) const
{
    require_same_group(o);
    std::vector<Rat> v = values_;
    for (size_t i = 0; i < v.size(); ++i) v[i] *= o.values_[i];
    return ClassFunction(group_, std::move(v));
}

ClassFunction ClassFunction::scaled(const Rat& c) const
{
    std::vector<Rat> v = values_;
    for (auto& x : v) x *= c;
    return ClassFunction(group_, std::move(v));
}

Rat ClassFunction::at_cyclic_class(int conjc_index) const
{
    if (!is_rationally_central())
        throw error("at_cyclic_class: function is not rationally central");
    int g = group_->cyclic_class_generator(conjc_index);
    return at_element(g);
}

ClassFunction theta_class(const GroupPtr& group, int conjc_index)
{
    if (conjc_index < 0 || conjc_index >= group->cyclic_class_count())
        throw error("theta_class: class index out of range");
    std::vector<Rat> v(static_cast<size_t>(group->class_count()), 0);
    for (int g = 0; g < group->order(); ++g)
        if (group->cyclic_class_of_element(g) == conjc_index)
            v[static_cast<size_t>(group->class_of(g))] = 1;
    return ClassFunction(group, std::move(v));
}

ClassFunction adams(const ClassFunction& chi, long m)
{
    const FiniteGroup& G = *chi.group();
    std::vector<Rat> v(static_cast<size_t>(G.class_count()));
    for (int c = 0; c < G.class_count(); ++c) {
        int g = G.class_representative(c);
        v[static_cast<size_t>(c)] = chi.at_element(G.power(g, m));
    }
    return ClassFunction(chi.group(), std::move(v));
}

ClassFunction exterior_char(const ClassFunction& chi, int j, std::optional<int> genuine_dim)
{
    if (j < 0) throw error("exterior_char: negative exterior power");
    if (genuine_dim && j > *genuine_dim)
        throw error("exterior_char: exterior power exceeds the dimension of a genuine character");
    std::vector<ClassFunction> e{ClassFunction::constant(chi.group(), 1)};
    for (int k = 1; k <= j; ++k) {
        ClassFunction acc = ClassFunction::constant(chi.group(), 0);
        for (int i = 1; i <= k; ++i) {
            ClassFunction term = e[static_cast<size_t>(k - i)] * adams(chi, i);
            acc = (i % 2 == 1) ? acc + term : acc - term;
        }
        e.push_back(acc.scaled(Rat(1, k)));
    }
    return e.back();
}

}  // namespace motivol
