#ifndef MOTIVOL_GROUP_HPP
#define MOTIVOL_GROUP_HPP

#include "motivol/rat.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace motivol {

// Finite group given by its multiplication table, bounded to |G| <= 64 so
// that every structural property can be checked exhaustively. Subgroups are
// element bitmasks.
class FiniteGroup {
public:
    static constexpr int kMaxOrder = 64;

    // Z/n with the canonical generator designated as Frobenius.
    static std::shared_ptr<const FiniteGroup> cyclic(int n);
    static std::shared_ptr<const FiniteGroup> trivial();
    static std::shared_ptr<const FiniteGroup> from_table(const std::vector<std::vector<int>>& table,
                                                         std::optional<int> frobenius = std::nullopt);
    // Generators as permutations of {0..m-1}; elements are the closure.
    static std::shared_ptr<const FiniteGroup> from_permutations(const std::vector<std::vector<int>>& gens,
                                                                std::optional<int> frobenius = std::nullopt);
    static std::shared_ptr<const FiniteGroup> symmetric(int n);  // n <= 4

    int order() const { return n_; }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return table_[static_cast<size_t>(a)][static_cast<size_t>(b)]; }
    int inverse(int a) const { return inverse_[static_cast<size_t>(a)]; }
    int power(int g, long k) const;
    int element_order(int g) const;
    std::optional<int> frobenius() const { return frobenius_; }
    int frobenius_or_throw() const;

    // --- conjugacy classes of elements, ordered by (size, min element) ---
    int class_count() const { return static_cast<int>(classes_.size()); }
    const std::vector<std::vector<int>>& conjugacy_classes() const { return classes_; }
    int class_of(int g) const { return class_of_[static_cast<size_t>(g)]; }
    int class_representative(int c) const { return classes_[static_cast<size_t>(c)].front(); }

    // --- subgroups ---
    std::uint64_t subgroup_generated(const std::vector<int>& gens) const;
    std::uint64_t conjugate_subgroup(std::uint64_t mask, int g) const;
    bool is_subgroup(std::uint64_t mask) const;
    bool is_normal_in(std::uint64_t inner, std::uint64_t outer) const;
    std::uint64_t normalizer(std::uint64_t mask) const;
    std::vector<int> elements_of(std::uint64_t mask) const;
    static int mask_order(std::uint64_t mask);

    std::vector<std::uint64_t> all_subgroups() const;
    const std::vector<std::uint64_t>& cyclic_subgroups() const { return cyclic_subgroups_; }

    // --- conjugacy classes of cyclic subgroups (Conjc), ordered by
    //     (subgroup order, minimal member mask) ---
    int cyclic_class_count() const { return static_cast<int>(cyclic_classes_.size()); }
    const std::vector<std::vector<std::uint64_t>>& cyclic_classes() const { return cyclic_classes_; }
    std::uint64_t cyclic_class_representative(int c) const { return cyclic_classes_[static_cast<size_t>(c)].front(); }
    int cyclic_class_of_subgroup(std::uint64_t mask) const;
    int cyclic_class_of_element(int g) const;  // class of <g>
    // a generator of the representative subgroup of class c
    int cyclic_class_generator(int c) const;

    // subgroup as a standalone group; embed maps its indices into this group
    struct SubgroupView {
        std::shared_ptr<const FiniteGroup> group;
        std::vector<int> embed;
    };
    SubgroupView subgroup_group(std::uint64_t mask, std::optional<int> frobenius = std::nullopt) const;

    // quotient by a normal subgroup; projection maps this group onto it
    struct QuotientView {
        std::shared_ptr<const FiniteGroup> group;
        std::vector<int> projection;
    };
    QuotientView quotient_group(std::uint64_t normal_mask) const;

private:
    FiniteGroup() = default;
    void finalize();  // validates the table, builds classes and subgroup data

    int n_ = 0;
    int identity_ = 0;
    std::optional<int> frobenius_;
    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
    std::vector<std::vector<int>> classes_;
    std::vector<int> class_of_;
    std::vector<std::uint64_t> cyclic_subgroups_;
    std::vector<std::vector<std::uint64_t>> cyclic_classes_;
    std::vector<int> cyclic_class_of_element_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

}  // namespace motivol

#endif
