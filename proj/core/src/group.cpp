#include "motivol/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace motivol {

namespace {

std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

}  // namespace

std::shared_ptr<const FiniteGroup> FiniteGroup::cyclic(int n)
{
    if (n < 1 || n > kMaxOrder) throw error("cyclic: order out of range");
    std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[static_cast<size_t>(a)][static_cast<size_t>(b)] = (a + b) % n;
    return from_table(t, n > 1 ? std::optional<int>(1) : std::optional<int>(0));
}

std::shared_ptr<const FiniteGroup> FiniteGroup::trivial() { return cyclic(1); }

std::shared_ptr<const FiniteGroup> FiniteGroup::from_table(const std::vector<std::vector<int>>& table,
                                                           std::optional<int> frobenius)
{
    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->n_ = static_cast<int>(table.size());
    g->table_ = table;
    g->frobenius_ = frobenius;
    g->finalize();
    return g;
}

std::shared_ptr<const FiniteGroup> FiniteGroup::from_permutations(const std::vector<std::vector<int>>& gens,
                                                                  std::optional<int> frobenius)
{
    if (gens.empty()) throw error("from_permutations: no generators");
    size_t m = gens[0].size();
    for (const auto& p : gens) {
        if (p.size() != m) throw error("from_permutations: inconsistent degrees");
        std::vector<bool> seen(m, false);
        for (int v : p) {
            if (v < 0 || static_cast<size_t>(v) >= m || seen[static_cast<size_t>(v)])
                throw error("from_permutations: not a permutation");
            seen[static_cast<size_t>(v)] = true;
        }
    }
    std::vector<int> id(m);
    std::iota(id.begin(), id.end(), 0);
    auto compose = [m](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> c(m);
        for (size_t i = 0; i < m; ++i) c[i] = a[static_cast<size_t>(b[i])];
        return c;
    };
    std::vector<std::vector<int>> elems{id};
    std::map<std::vector<int>, int> index{{id, 0}};
    for (size_t i = 0; i < elems.size(); ++i) {
        for (const auto& gen : gens) {
            auto next = compose(elems[i], gen);
            if (index.emplace(next, static_cast<int>(elems.size())).second) {
                elems.push_back(next);
                if (elems.size() > kMaxOrder) throw error("from_permutations: group exceeds order 64");
            }
        }
    }
    int n = static_cast<int>(elems.size());
    std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            t[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                index.at(compose(elems[static_cast<size_t>(a)], elems[static_cast<size_t>(b)]));
    return from_table(t, frobenius);
}

std::shared_ptr<const FiniteGroup> FiniteGroup::symmetric(int n)
{
    if (n < 1 || n > 4) throw error("symmetric: only n <= 4 supported");
    if (n == 1) return trivial();
    std::vector<int> transposition(static_cast<size_t>(n));
    std::iota(transposition.begin(), transposition.end(), 0);
    std::swap(transposition[0], transposition[1]);
    std::vector<int> cycle(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) cycle[static_cast<size_t>(i)] = (i + 1) % n;
    return from_permutations({transposition, cycle});
}

void FiniteGroup::finalize()
{
    if (n_ < 1 || n_ > kMaxOrder) throw error("FiniteGroup: order out of range (1..64)");
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != n_) throw error("FiniteGroup: table is not square");
        for (int v : row)
            if (v < 0 || v >= n_) throw error("FiniteGroup: table entry out of range");
    }

    // identity
    identity_ = -1;
    for (int e = 0; e < n_; ++e) {
        bool ok = true;
        for (int a = 0; a < n_ && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
        if (ok) {
            identity_ = e;
            break;
        }
    }
    if (identity_ < 0) throw error("FiniteGroup: no identity element");

    // inverses
    inverse_.assign(static_cast<size_t>(n_), -1);
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b)
            if (mul(a, b) == identity_ && mul(b, a) == identity_) {
                inverse_[static_cast<size_t>(a)] = b;
                break;
            }
        if (inverse_[static_cast<size_t>(a)] < 0) throw error("FiniteGroup: missing inverse");
    }

    // associativity, checked in full
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            for (int c = 0; c < n_; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw error("FiniteGroup: table is not associative");

    if (frobenius_ && (*frobenius_ < 0 || *frobenius_ >= n_))
        throw error("FiniteGroup: frobenius index out of range");

    // conjugacy classes of elements
    class_of_.assign(static_cast<size_t>(n_), -1);
    std::vector<std::vector<int>> classes;
    for (int g = 0; g < n_; ++g) {
        if (class_of_[static_cast<size_t>(g)] >= 0) continue;
        std::set<int> orbit;
        for (int h = 0; h < n_; ++h) orbit.insert(mul(mul(h, g), inverse(h)));
        std::vector<int> cls(orbit.begin(), orbit.end());
        for (int x : cls) class_of_[static_cast<size_t>(x)] = static_cast<int>(classes.size());
        classes.push_back(cls);
    }
    std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.front() < b.front();
    });
    classes_ = classes;
    for (int c = 0; c < static_cast<int>(classes_.size()); ++c)
        for (int x : classes_[static_cast<size_t>(c)]) class_of_[static_cast<size_t>(x)] = c;

    // cyclic subgroups and their conjugacy classes
    std::set<std::uint64_t> cyc;
    for (int g = 0; g < n_; ++g) cyc.insert(subgroup_generated({g}));
    cyclic_subgroups_.assign(cyc.begin(), cyc.end());

    std::map<std::uint64_t, int> class_index;
    std::vector<std::vector<std::uint64_t>> cclasses;
    for (std::uint64_t m : cyclic_subgroups_) {
        if (class_index.count(m)) continue;
        std::set<std::uint64_t> orbit;
        for (int h = 0; h < n_; ++h) orbit.insert(conjugate_subgroup(m, h));
        std::vector<std::uint64_t> cls(orbit.begin(), orbit.end());
        for (std::uint64_t x : cls) class_index[x] = static_cast<int>(cclasses.size());
        cclasses.push_back(cls);
    }
    std::sort(cclasses.begin(), cclasses.end(), [](const auto& a, const auto& b) {
        int oa = mask_order(a.front()), ob = mask_order(b.front());
        if (oa != ob) return oa < ob;
        return a.front() < b.front();
    });
    cyclic_classes_ = cclasses;
    class_index.clear();
    for (int c = 0; c < static_cast<int>(cyclic_classes_.size()); ++c)
        for (std::uint64_t x : cyclic_classes_[static_cast<size_t>(c)]) class_index[x] = c;
    cyclic_class_of_element_.assign(static_cast<size_t>(n_), -1);
    for (int g = 0; g < n_; ++g)
        cyclic_class_of_element_[static_cast<size_t>(g)] = class_index.at(subgroup_generated({g}));
}

int FiniteGroup::frobenius_or_throw() const
{
    if (!frobenius_) throw error("group has no designated Frobenius element");
    return *frobenius_;
}

int FiniteGroup::power(int g, long k) const
{
    if (k < 0) return power(inverse(g), -k);
    int acc = identity_, base = g;
    long e = k;
    while (e) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

int FiniteGroup::element_order(int g) const
{
    int x = g, k = 1;
    while (x != identity_) {
        x = mul(x, g);
        ++k;
    }
    return k;
}

std::uint64_t FiniteGroup::subgroup_generated(const std::vector<int>& gens) const
{
    std::uint64_t mask = bit(identity_);
    std::vector<int> frontier{identity_};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier)
            for (int g : gens) {
                int y = mul(x, g);
                if (!(mask & bit(y))) {
                    mask |= bit(y);
                    next.push_back(y);
                }
            }
        frontier = std::move(next);
    }
    return mask;
}

std::uint64_t FiniteGroup::conjugate_subgroup(std::uint64_t mask, int g) const
{
    std::uint64_t out = 0;
    for (int x = 0; x < n_; ++x)
        if (mask & bit(x)) out |= bit(mul(mul(g, x), inverse(g)));
    return out;
}

bool FiniteGroup::is_subgroup(std::uint64_t mask) const
{
    if (!(mask & bit(identity_))) return false;
    for (int a = 0; a < n_; ++a) {
        if (!(mask & bit(a))) continue;
        for (int b = 0; b < n_; ++b)
            if ((mask & bit(b)) && !(mask & bit(mul(a, b)))) return false;
    }
    return true;
}

bool FiniteGroup::is_normal_in(std::uint64_t inner, std::uint64_t outer) const
{
    for (int g = 0; g < n_; ++g)
        if ((outer & bit(g)) && conjugate_subgroup(inner, g) != inner) return false;
    return true;
}

std::uint64_t FiniteGroup::normalizer(std::uint64_t mask) const
{
    std::uint64_t out = 0;
    for (int g = 0; g < n_; ++g)
        if (conjugate_subgroup(mask, g) == mask) out |= bit(g);
    return out;
}

std::vector<int> FiniteGroup::elements_of(std::uint64_t mask) const
{
    std::vector<int> out;
    for (int g = 0; g < n_; ++g)
        if (mask & bit(g)) out.push_back(g);
    return out;
}

int FiniteGroup::mask_order(std::uint64_t mask)
{
    int c = 0;
    while (mask) {
        mask &= mask - 1;
        ++c;
    }
    return c;
}

std::vector<std::uint64_t> FiniteGroup::all_subgroups() const
{
    std::set<std::uint64_t> known(cyclic_subgroups_.begin(), cyclic_subgroups_.end());
    known.insert(bit(identity_));
    // close under join with cyclic subgroups until stable
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::uint64_t> snapshot(known.begin(), known.end());
        for (std::uint64_t h : snapshot)
            for (int g = 0; g < n_; ++g) {
                if (h & bit(g)) continue;
                auto gens = elements_of(h);
                gens.push_back(g);
                std::uint64_t joined = subgroup_generated(gens);
                if (known.insert(joined).second) grew = true;
            }
    }
    std::vector<std::uint64_t> out(known.begin(), known.end());
    std::sort(out.begin(), out.end(), [](std::uint64_t a, std::uint64_t b) {
        int oa = mask_order(a), ob = mask_order(b);
        if (oa != ob) return oa < ob;
        return a < b;
    });
    return out;
}

int FiniteGroup::cyclic_class_of_subgroup(std::uint64_t mask) const
{
    for (int c = 0; c < cyclic_class_count(); ++c)
        for (std::uint64_t m : cyclic_classes_[static_cast<size_t>(c)])
            if (m == mask) return c;
    throw error("cyclic_class_of_subgroup: not a cyclic subgroup of this group");
}

int FiniteGroup::cyclic_class_of_element(int g) const
{
    return cyclic_class_of_element_.at(static_cast<size_t>(g));
}

int FiniteGroup::cyclic_class_generator(int c) const
{
    std::uint64_t rep = cyclic_class_representative(c);
    for (int g : elements_of(rep))
        if (subgroup_generated({g}) == rep) return g;
    throw error("cyclic_class_generator: representative subgroup is not cyclic");
}

FiniteGroup::SubgroupView FiniteGroup::subgroup_group(std::uint64_t mask, std::optional<int> frobenius) const
{
    if (!is_subgroup(mask)) throw error("subgroup_group: mask is not a subgroup");
    std::vector<int> embed = elements_of(mask);
    std::vector<int> local(static_cast<size_t>(n_), -1);
    for (size_t i = 0; i < embed.size(); ++i) local[static_cast<size_t>(embed[i])] = static_cast<int>(i);
    int m = static_cast<int>(embed.size());
    std::vector<std::vector<int>> t(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            t[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                local[static_cast<size_t>(mul(embed[static_cast<size_t>(a)], embed[static_cast<size_t>(b)]))];
    std::optional<int> frob_local;
    if (frobenius) {
        if (local[static_cast<size_t>(*frobenius)] < 0)
            throw error("subgroup_group: designated frobenius is not in the subgroup");
        frob_local = local[static_cast<size_t>(*frobenius)];
    }
    return SubgroupView{from_table(t, frob_local), embed};
}

FiniteGroup::QuotientView FiniteGroup::quotient_group(std::uint64_t normal_mask) const
{
    if (!is_subgroup(normal_mask)) throw error("quotient_group: mask is not a subgroup");
    if (!is_normal_in(normal_mask, ~std::uint64_t{0} >> (64 - n_)))
        throw error("quotient_group: subgroup is not normal");
    std::vector<int> coset_of(static_cast<size_t>(n_), -1);
    std::vector<int> reps;
    for (int g = 0; g < n_; ++g) {
        if (coset_of[static_cast<size_t>(g)] >= 0) continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(g);
        for (int h : elements_of(normal_mask)) coset_of[static_cast<size_t>(mul(g, h))] = c;
    }
    int m = static_cast<int>(reps.size());
    std::vector<std::vector<int>> t(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            t[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                coset_of[static_cast<size_t>(mul(reps[static_cast<size_t>(a)], reps[static_cast<size_t>(b)]))];
    std::optional<int> frob;
    if (frobenius_) frob = coset_of[static_cast<size_t>(*frobenius_)];
    return QuotientView{from_table(t, frob), coset_of};
}

}  // namespace motivol
