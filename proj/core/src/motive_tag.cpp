#include "motivol/motive_tag.hpp"

namespace motivol {

Rat MotiveTag::trace(long m) const
{
    if (m < 0) throw error("MotiveTag::trace: negative power");
    if (m == 0) return Rat(dim);
    if (trace_recurrence) {
        const auto& [a, q] = *trace_recurrence;
        Rat s_prev = Rat(dim), s = a;  // s_0, s_1
        for (long i = 2; i <= m; ++i) {
            Rat s_next = a * s - q * s_prev;
            s_prev = s;
            s = s_next;
        }
        return m == 1 ? s : s;
    }
    if (m <= static_cast<long>(trace_values.size())) return trace_values[static_cast<size_t>(m - 1)];
    throw error("MotiveTag::trace: no trace value for m=" + std::to_string(m) +
                " on tag '" + name + "'");
}

void TagRegistry::add(MotiveTag tag, std::optional<Rat> q_for_purity)
{
    if (tag.name.empty()) throw error("TagRegistry: tag needs a name");
    if (tag.dim < 1) throw error("TagRegistry: tag dimension must be >= 1");
    if (static_cast<int>(tag.exterior.size()) != tag.dim + 1)
        throw error("TagRegistry: exterior table must list Lambda^0..Lambda^dim");
    if (!(tag.exterior[0].size() == 1 && tag.exterior[0][0].coef == 1 && tag.exterior[0][0].tate == 0 &&
          tag.exterior[0][0].tags.empty()))
        throw error("TagRegistry: Lambda^0 must be 1");
    if (q_for_purity) {
        // |s_m|^2 <= dim^2 q^(m w), kept in exact arithmetic
        for (long m = 1; m <= 20; ++m) {
            Rat s;
            try {
                s = tag.trace(m);
            } catch (const error&) {
                break;  // explicit table shorter than 20 entries
            }
            Rat bound = Rat(tag.dim) * Rat(tag.dim) * pow_rat(*q_for_purity, m * tag.weight);
            if (s * s > bound)
                throw error("TagRegistry: tag '" + tag.name + "' violates the purity bound at m=" +
                            std::to_string(m));
        }
    }
    auto [it, fresh] = tags_.emplace(tag.name, std::move(tag));
    (void)it;
    if (!fresh) throw error("TagRegistry: duplicate tag name");
}

const MotiveTag& TagRegistry::get(const std::string& name) const
{
    auto it = tags_.find(name);
    if (it == tags_.end()) throw error("TagRegistry: unknown tag '" + name + "'");
    return it->second;
}

std::string genus1_h1_name(const Rat& a, const Rat& q)
{
    return "h1[a=" + rat_to_string(a) + ",q=" + rat_to_string(q) + "]";
}

MotiveTag genus1_h1_tag(const Rat& a, const Rat& q)
{
    MotiveTag t;
    t.name = genus1_h1_name(a, q);
    t.weight = 1;
    t.dim = 2;
    t.trace_recurrence = std::make_pair(a, q);
    t.exterior.resize(3);
    t.exterior[0] = {TagTerm{Rat(1), 0, {}}};
    t.exterior[1] = {TagTerm{Rat(1), 0, {{t.name, 1}}}};
    t.exterior[2] = {TagTerm{Rat(1), 1, {}}};
    return t;
}

}  // namespace motivol
