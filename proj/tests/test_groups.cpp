#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "motivol/eta.hpp"
#include "motivol/newton.hpp"
#include "motivol/rep.hpp"

using namespace motivol;

namespace {

std::vector<GroupPtr> small_groups()
{
    return {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::cyclic(4),
            FiniteGroup::cyclic(5), FiniteGroup::cyclic(6), FiniteGroup::symmetric(3)};
}

}  // namespace

TEST_CASE("group construction and validation")
{
    auto z6 = FiniteGroup::cyclic(6);
    CHECK(z6->order() == 6);
    CHECK(z6->element_order(1) == 6);
    CHECK(z6->power(1, 4) == 4);
    CHECK(z6->power(1, -1) == 5);
    CHECK(z6->frobenius_or_throw() == 1);

    auto s3 = FiniteGroup::symmetric(3);
    CHECK(s3->order() == 6);
    CHECK(s3->conjugacy_classes().size() == 3);

    // non-associative table is rejected
    std::vector<std::vector<int>> bad{{0, 1, 2}, {1, 2, 0}, {2, 1, 0}};
    CHECK_THROWS_AS((void)FiniteGroup::from_table(bad), const error&);
}

TEST_CASE("conjugacy classes of cyclic subgroups")
{
    auto z2 = FiniteGroup::cyclic(2);
    CHECK(z2->cyclic_class_count() == 2);

    // S3: {e}, the three conjugate transposition subgroups, the 3-cycle subgroup
    auto s3 = FiniteGroup::symmetric(3);
    CHECK(s3->cyclic_class_count() == 3);
    std::vector<size_t> orbit_sizes;
    for (const auto& cls : s3->cyclic_classes()) orbit_sizes.push_back(cls.size());
    CHECK(orbit_sizes == std::vector<size_t>{1, 3, 1});

    auto z6 = FiniteGroup::cyclic(6);
    CHECK(z6->cyclic_class_count() == 4);
    std::vector<int> orders;
    for (const auto& cls : z6->cyclic_classes()) orders.push_back(FiniteGroup::mask_order(cls.front()));
    CHECK(orders == std::vector<int>{1, 2, 3, 6});

    // every element lies in exactly one class via <g>
    for (const auto& G : small_groups())
        for (int g = 0; g < G->order(); ++g) {
            int c = G->cyclic_class_of_element(g);
            CHECK(c >= 0);
            CHECK(c < G->cyclic_class_count());
        }
}

TEST_CASE("theta classes")
{
    auto z2 = FiniteGroup::cyclic(2);
    CHECK(theta_class(z2, 0).values() == std::vector<Rat>{1, 0});
    CHECK(theta_class(z2, 1).values() == std::vector<Rat>{0, 1});

    for (const auto& G : small_groups()) {
        ClassFunction sum = ClassFunction::constant(G, 0);
        for (int c = 0; c < G->cyclic_class_count(); ++c) sum = sum + theta_class(G, c);
        CHECK(sum.is_constant_one());
    }

    auto z4 = FiniteGroup::cyclic(4);
    int order4 = z4->cyclic_class_count() - 1;
    CHECK(FiniteGroup::mask_order(z4->cyclic_class_representative(order4)) == 4);
    ClassFunction t = theta_class(z4, order4);
    for (int g = 0; g < 4; ++g) CHECK(t.at_element(g) == (z4->element_order(g) == 4 ? 1 : 0));
}

TEST_CASE("characters, adams, exterior powers")
{
    auto z2 = FiniteGroup::cyclic(2);
    MatrixRep reg = MatrixRep::regular(z2);
    ClassFunction chi = reg.character();
    CHECK(chi.values() == std::vector<Rat>{2, 0});
    CHECK(adams(chi, 2).values() == std::vector<Rat>{2, 2});

    // Lambda^2 of the regular representation is the determinant character
    ClassFunction ext2 = exterior_char(chi, 2, 2);
    CHECK(ext2.values() == std::vector<Rat>{1, -1});
    for (int g = 0; g < 2; ++g) {
        std::vector<Rat> cp = reversed_char_poly(reg.matrix(g));
        CHECK(ext2.at_element(g) == cp[2]);  // det(1-tM) = 1 - tr t + det t^2
    }

    CHECK(exterior_char(chi, 0).is_constant_one());
    CHECK_THROWS_AS((void)exterior_char(chi, 3, 2), const error&);

    for (const auto& G : small_groups()) {
        ClassFunction c = MatrixRep::regular(G).character();
        for (long m = 1; m <= 4; ++m)
            for (long k = 1; k <= 4; ++k) CHECK(adams(adams(c, m), k) == adams(c, m * k));
    }
}

TEST_CASE("char_poly_P on the spec examples")
{
    auto z2 = FiniteGroup::cyclic(2);
    MatrixRep reg = MatrixRep::regular(z2);
    std::uint64_t e_mask = z2->subgroup_generated({0});
    std::uint64_t g_mask = z2->subgroup_generated({1});

    CHECK(char_poly_P(reg, e_mask, g_mask) == std::vector<Rat>{1, 0, -1});  // 1 - t^2
    CHECK(char_poly_P(reg, g_mask, g_mask) == std::vector<Rat>{1, -1});     // trivial line
    CHECK(char_poly_P(reg, e_mask, e_mask) == std::vector<Rat>{1, -2, 1});  // (1-t)^2

    // I must be normal in D and D/I cyclic
    auto s3 = FiniteGroup::symmetric(3);
    std::uint64_t transposition = 0;
    for (int g = 0; g < 6; ++g)
        if (s3->element_order(g) == 2) {
            transposition = s3->subgroup_generated({g});
            break;
        }
    std::uint64_t whole = s3->subgroup_generated({1, 2, 3, 4, 5});
    MatrixRep reg3 = MatrixRep::regular(s3);
    CHECK_THROWS_AS((void)char_poly_P(reg3, transposition, whole), const error&);
}

TEST_CASE("char_poly_P agrees with the exterior-character route")
{
    for (const auto& G : small_groups()) {
        MatrixRep reg = MatrixRep::regular(G);
        ClassFunction chi = reg.character();
        std::uint64_t e_mask = G->subgroup_generated({G->identity()});
        for (int c = 0; c < G->cyclic_class_count(); ++c) {
            std::uint64_t D = G->cyclic_class_representative(c);
            CHECK(char_poly_P(reg, e_mask, D) == char_poly_from_character(chi, D, reg.dim()));
        }
    }
}

TEST_CASE("eta classes on Z/2")
{
    auto z2 = FiniteGroup::cyclic(2);
    // class 0 = {e}, class 1 = {G}
    CHECK(eta_class(z2, 1, 1) == theta_class(z2, 1));
    CHECK(eta_class(z2, 1, 2).is_zero());
    CHECK(eta_class(z2, 1, 3) == theta_class(z2, 1));
    CHECK(eta_class(z2, 0, 2).is_constant_one());
    CHECK(eta_class(z2, 0, 1) == theta_class(z2, 0));
}

TEST_CASE("eta partition identity")
{
    for (const auto& G : small_groups())
        for (long n = 1; n <= 12; ++n) {
            ClassFunction sum = ClassFunction::constant(G, 0);
            for (int c = 0; c < G->cyclic_class_count(); ++c) sum = sum + eta_class(G, c, n);
            CHECK(sum.is_constant_one());
        }
}

TEST_CASE("eta trace identity")
{
    // sum_C chi(C) eta(C,n) equals both the Adams character chi(g^n) and the
    // power-sum Newton evaluation on the exterior characters
    for (const auto& G : small_groups()) {
        std::vector<MatrixRep> reps;
        reps.push_back(MatrixRep::regular(G));
        for (std::uint64_t H : G->all_subgroups()) reps.push_back(MatrixRep::coset_permutation(G, H));
        for (const MatrixRep& rho : reps) {
            ClassFunction chi = rho.character();
            std::vector<ClassFunction> lambda;
            for (int j = 1; j <= rho.dim(); ++j) lambda.push_back(exterior_char(chi, j, rho.dim()));
            for (long n = 1; n <= 10; ++n) {
                ClassFunction lhs = ClassFunction::constant(G, 0);
                for (int c = 0; c < G->cyclic_class_count(); ++c)
                    lhs = lhs + eta_class(G, c, n).scaled(chi.at_cyclic_class(c));
                CHECK(lhs == adams(chi, n));
                CHECK(lhs == newton_power_sum(lambda, static_cast<int>(n)));
            }
        }
    }
}

TEST_CASE("eta indicator")
{
    CHECK(eta_indicator(2, 2, 1) == 1);
    CHECK(eta_indicator(2, 2, 3) == 1);
    CHECK(eta_indicator(2, 2, 2) == 0);
    CHECK(eta_indicator(2, 1, 2) == 1);
    CHECK(eta_indicator(2, 1, 1) == 0);
    CHECK(eta_indicator(1, 1, 7) == 1);
    CHECK_THROWS_AS((void)eta_indicator(2, 4, 1), const error&);

    // the indicator is the value of the eta class at the Frobenius, and picks
    // out the class of <g_F^n>
    for (int r : {1, 2, 3, 4, 5, 6}) {
        auto G = FiniteGroup::cyclic(r);
        int frob = G->frobenius_or_throw();
        for (long n = 1; n <= 12; ++n)
            for (int c = 0; c < G->cyclic_class_count(); ++c) {
                std::uint64_t C = G->cyclic_class_representative(c);
                Rat at_frob = eta_class(G, c, n).at_element(frob);
                CHECK(at_frob == eta_indicator(r, FiniteGroup::mask_order(C), n));
                CHECK(at_frob == (G->subgroup_generated({G->power(frob, n)}) == C ? 1 : 0));
            }
    }
}

TEST_CASE("induced and quotient representations")
{
    auto z4 = FiniteGroup::cyclic(4);
    std::uint64_t h_mask = z4->subgroup_generated({2});
    auto H = z4->subgroup_group(h_mask, 2);
    CHECK(H.group->order() == 2);

    // Ind of the trivial rep of H is the coset permutation rep
    MatrixRep ind = MatrixRep::induced(z4, H, MatrixRep::trivial(H.group));
    CHECK(ind.dim() == 2);
    CHECK(ind.character() == MatrixRep::coset_permutation(z4, h_mask).character());

    auto Q = z4->quotient_group(h_mask);
    CHECK(Q.group->order() == 2);
    MatrixRep sign_q = MatrixRep::sign_cyclic(Q.group);
    MatrixRep pulled = MatrixRep::pullback(sign_q, z4, Q.projection);
    CHECK(pulled.character().at_element(1) == -1);
    CHECK(pulled.character().at_element(2) == 1);
}
