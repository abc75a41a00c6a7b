#include "motivol/artin_l.hpp"

#include <map>

namespace motivol {

namespace {

// P(t^n)^e expanded at precision K: computed at precision K/n in s = t^n and
// spread back, so large exponents stay cheap.
TruncatedSeries<Rat> poly_tn_pow(const std::vector<Rat>& poly, long n, const BigInt& e, int K)
{
    int ks = K / static_cast<int>(n);
    TruncatedSeries<Rat> s(ks, Rat(0));
    for (size_t j = 0; j < poly.size() && static_cast<int>(j) <= ks; ++j) s[static_cast<int>(j)] = poly[j];
    TruncatedSeries<Rat> powed = series_pow_int(s, e);
    TruncatedSeries<Rat> out(K, Rat(0));
    for (int j = 0; j <= ks; ++j) out[static_cast<int>(n) * j] = powed[j];
    return out;
}

}  // namespace

TruncatedSeries<Rat> artin_L(const GCover& cover, const MatrixRep& rho, int K)
{
    if (rho.group() != cover.group()) throw error("artin_L: representation over the wrong group");
    if (K < 0) throw error("artin_L: negative precision");
    const FiniteGroup& G = *cover.group();
    std::uint64_t e_mask = G.subgroup_generated({G.identity()});
    std::map<std::uint64_t, std::vector<Rat>> poly_cache;
    TruncatedSeries<Rat> acc = TruncatedSeries<Rat>::one(K, Rat(0));
    for (long n = 1; n <= K; ++n)
        for (const GCover::Entry& entry : cover.decompositions(n)) {
            if (entry.count == 0) continue;
            auto it = poly_cache.find(entry.subgroup);
            if (it == poly_cache.end())
                it = poly_cache.emplace(entry.subgroup, char_poly_P(rho, e_mask, entry.subgroup)).first;
            acc = acc * poly_tn_pow(it->second, n, -entry.count, K);
        }
    return acc;
}

CompatReport compat_suite(const CurveCounts& base, int r, int K)
{
    if (r < 1 || r > 6) throw error("compat_suite: cover degree must be 1..6");
    CompatReport report;
    auto record = [&report](const std::string& name, bool pass, const std::string& detail = {}) {
        report.items.push_back({name, pass, detail});
    };

    GroupPtr G = FiniteGroup::cyclic(r);
    GCover cover = GCover::constant_field(base, G);
    MatrixRep triv = MatrixRep::trivial(G);
    MatrixRep reg = MatrixRep::regular(G);

    // L(triv) is the zeta of the base
    record("trivial-rep = zeta", artin_L(cover, triv, K) == zeta_hw(base, K));

    // direct sums
    {
        MatrixRep sum = MatrixRep::direct_sum(triv, reg);
        bool ok = artin_L(cover, sum, K) == artin_L(cover, triv, K) * artin_L(cover, reg, K);
        if (r % 2 == 0) {
            MatrixRep sgn = MatrixRep::sign_cyclic(G);
            ok = ok && artin_L(cover, MatrixRep::direct_sum(triv, sgn), K) ==
                           artin_L(cover, triv, K) * artin_L(cover, sgn, K);
        }
        record("direct-sum", ok);
    }

    // induction: L(subcover, rho) = L(cover, Ind rho) for every subgroup
    for (std::uint64_t mask : G->all_subgroups()) {
        int h = FiniteGroup::mask_order(mask);
        if (h == r) continue;
        GCover sub = cover.subcover(mask);
        FiniteGroup::SubgroupView view{sub.group(), G->elements_of(mask)};
        for (bool use_reg : {false, true}) {
            MatrixRep rho_h = use_reg ? MatrixRep::regular(view.group) : MatrixRep::trivial(view.group);
            MatrixRep ind = MatrixRep::induced(G, view, rho_h);
            bool ok = artin_L(sub, rho_h, K) == artin_L(cover, ind, K);
            record("induction H=" + std::to_string(h) + (use_reg ? " regular" : " trivial"), ok);
        }
    }

    // quotient: G/H covers against pulled-back representations
    for (std::uint64_t mask : G->all_subgroups()) {
        int h = FiniteGroup::mask_order(mask);
        if (h == 1 || h == r) continue;
        auto Q = G->quotient_group(mask);
        GCover qcover = GCover::constant_field(base, Q.group);
        MatrixRep rho_q = MatrixRep::regular(Q.group);
        bool ok = artin_L(qcover, rho_q, K) ==
                  artin_L(cover, MatrixRep::pullback(rho_q, G, Q.projection), K);
        record("quotient |H|=" + std::to_string(h), ok);
    }

    // restriction: an H-cover against the induced cover of disjoint copies
    for (std::uint64_t mask : G->all_subgroups()) {
        int h = FiniteGroup::mask_order(mask);
        if (h == r) continue;
        auto H = G->subgroup_group(mask, std::nullopt);
        // the H-cover of the base itself (group Z/h), then induced up to G
        GroupPtr Hg = FiniteGroup::cyclic(h);
        GCover hcover = GCover::constant_field(base, Hg);
        // embed Z/h as the subgroup: generator -> generator of mask
        std::vector<int> embed(static_cast<size_t>(h));
        int gen = -1;
        for (int g : G->elements_of(mask))
            if (G->subgroup_generated({g}) == mask) {
                gen = g;
                break;
            }
        if (gen < 0) continue;  // mask not cyclic (cannot happen in Z/r)
        for (int k = 0; k < h; ++k) embed[static_cast<size_t>(k)] = G->power(gen, k);
        GCover induced_cover = hcover.induced_to(G, embed);
        MatrixRep rho = MatrixRep::regular(G);
        FiniteGroup::SubgroupView view{Hg, embed};
        MatrixRep restricted = MatrixRep::restricted(rho, view);
        bool ok = artin_L(hcover, restricted, K) == artin_L(induced_cover, rho, K);
        record("restriction |H|=" + std::to_string(h), ok);
    }
    return report;
}

}  // namespace motivol
