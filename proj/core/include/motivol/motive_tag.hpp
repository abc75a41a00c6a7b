#ifndef MOTIVOL_MOTIVE_TAG_HPP
#define MOTIVOL_MOTIVE_TAG_HPP

#include "motivol/rat.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace motivol {

// One multiplicative piece of an exterior-power table entry: coef * l^tate *
// product of registered tags. Tag tables never involve group characters.
struct TagTerm {
    Rat coef;
    int tate = 0;
    std::map<std::string, int> tags;
};

// A registered pure motive: name, weight, dimension, a Frobenius trace rule
// and the table of its exterior powers.
struct MotiveTag {
    std::string name;
    int weight = 0;
    int dim = 0;
    // s_m = a s_{m-1} - q s_{m-2}, s_0 = dim, s_1 = a (the H^1 recurrence)
    std::optional<std::pair<Rat, Rat>> trace_recurrence;
    std::vector<Rat> trace_values;  // explicit traces for m = 1,2,...
    std::vector<std::vector<TagTerm>> exterior;  // Lambda^0 .. Lambda^dim

    Rat trace(long m) const;
};

class TagRegistry {
public:
    // purity |Tr(F^m)| <= dim q^(m w / 2) is enforced for m <= 20 when the
    // base cardinality is known
    void add(MotiveTag tag, std::optional<Rat> q_for_purity = std::nullopt);
    bool has(const std::string& name) const { return tags_.count(name) != 0; }
    const MotiveTag& get(const std::string& name) const;

private:
    std::map<std::string, MotiveTag> tags_;
};

using TagRegistryPtr = std::shared_ptr<const TagRegistry>;

// the genus-1 H^1 tag for trace a over F_q; Lambda^2 h1 = l
MotiveTag genus1_h1_tag(const Rat& a, const Rat& q);
std::string genus1_h1_name(const Rat& a, const Rat& q);

}  // namespace motivol

#endif
