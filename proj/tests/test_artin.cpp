#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "motivol/artin_l.hpp"
#include "motivol/eta.hpp"
#include "support/gf.hpp"

using namespace motivol;

namespace {

using QS = TruncatedSeries<Rat>;

QS from_poly(std::vector<Rat> coeffs, int K)
{
    QS s(K, Rat(0));
    for (size_t i = 0; i < coeffs.size() && static_cast<int>(i) <= K; ++i) s[static_cast<int>(i)] = coeffs[i];
    return s;
}

// (1 + a t + q t^2) / ((1 + t)(1 + q t)), the sign-character L of a
// quadratic constant-field cover of an elliptic curve
QS sign_L_elliptic(const Rat& a, const Rat& q, int K)
{
    QS num = from_poly({1, a, q}, K);
    QS den = from_poly({1, 1}, K) * from_poly({1, q}, K);
    return num * series_inv(den);
}

}  // namespace

TEST_CASE("closed points")
{
    CurveCounts p1_2 = CurveCounts::p1(2);
    // frozen from brute-force counts over F_2, F_4, F_8
    testsupport::GF f1(2, 1), f2(2, 2), f3(2, 3);
    CHECK(Rat(testsupport::count_p1(f1)) == Rat(p1_2.count(1)));
    CHECK(Rat(testsupport::count_p1(f2)) == Rat(p1_2.count(2)));
    CHECK(Rat(testsupport::count_p1(f3)) == Rat(p1_2.count(3)));
    CHECK(p1_2.closed_points(1) == 3);
    CHECK(p1_2.closed_points(2) == 1);
    CHECK(p1_2.closed_points(3) == 2);

    for (int q : {2, 3, 5}) {
        CurveCounts c = CurveCounts::p1(q);
        CHECK(c.closed_points(1) == q + 1);
        CHECK(c.closed_points(2) == BigInt(q) * (q - 1) / 2);
    }

    CurveCounts e = CurveCounts::elliptic(0, 2);
    CHECK(e.count(1) == 3);
    CHECK(e.closed_points(1) == 3);

    for (long n = 1; n <= 20; ++n) {
        CHECK(CurveCounts::p1(3).closed_points(n) >= 0);
        CHECK(CurveCounts::elliptic(-1, 2).closed_points(n) >= 0);
    }

    CurveCounts partial = CurveCounts::from_counts(2, 0, {BigInt(3), BigInt(5)});
    CHECK_THROWS_AS((void)partial.closed_points(3), const error&);
    // counts violating the Weil bound are rejected
    CHECK_THROWS_AS((void)CurveCounts::from_counts(2, 0, {BigInt(9)}).count(1), const error&);
}

TEST_CASE("hasse-weil zeta")
{
    const int K = 20;
    for (int q : {2, 3}) {
        QS closed = series_inv(from_poly({1, -1}, K)) * series_inv(from_poly({1, -q}, K));
        CHECK(zeta_hw(CurveCounts::p1(q), K) == closed);
    }
    for (int q : {2, 3})
        for (long a : {0L, -1L, 1L}) {
            CurveCounts e = CurveCounts::elliptic(a, q);
            QS closed = from_poly({1, -a, q}, K) * series_inv(from_poly({1, -1}, K)) *
                        series_inv(from_poly({1, -q}, K));
            CHECK(zeta_hw(e, K) == closed);
            CHECK(zeta_hw(e, K) == zeta_hw_euler(e, K));
        }
    CHECK(zeta_hw(CurveCounts::point(5), 8) == series_inv(from_poly({1, -1}, 8)));
    CHECK(zeta_hw(CurveCounts::p1(2), K) == zeta_hw_euler(CurveCounts::p1(2), K));
}

TEST_CASE("decomposition counts")
{
    CurveCounts base = CurveCounts::p1(2);
    GCover cover = GCover::constant_field(base, 2);
    const FiniteGroup& G = *cover.group();
    std::uint64_t e_mask = G.subgroup_generated({0});
    std::uint64_t g_mask = G.subgroup_generated({1});

    CHECK(decomposition_count(cover, g_mask, 1) == 3);
    CHECK(decomposition_count(cover, e_mask, 1) == 0);
    CHECK(decomposition_count(cover, e_mask, 2) == 1);
    CHECK(decomposition_count(cover, g_mask, 2) == 0);

    for (long n = 1; n <= 10; ++n) {
        BigInt total = 0;
        for (std::uint64_t mask : {e_mask, g_mask}) total += decomposition_count(cover, mask, n);
        CHECK(total == base.closed_points(n));
    }
}

TEST_CASE("artin symbols aggregate to decomposition counts")
{
    for (int r : {2, 3}) {
        for (auto base : {CurveCounts::p1(2), CurveCounts::p1(3), CurveCounts::elliptic(-1, 2)}) {
            GCover cover = GCover::constant_field(base, r);
            const FiniteGroup& G = *cover.group();
            for (long n = 1; n <= 10; ++n) {
                if (r == 2) {
                    BigInt odd = artin_symbol_count(cover, 1, n);
                    BigInt even = artin_symbol_count(cover, 0, n);
                    CHECK(odd == (n % 2 == 1 ? base.closed_points(n) : BigInt(0)));
                    CHECK(even == (n % 2 == 0 ? base.closed_points(n) : BigInt(0)));
                }
                for (int c = 0; c < G.cyclic_class_count(); ++c) {
                    std::uint64_t mask = G.cyclic_class_representative(c);
                    BigInt agg = 0;
                    for (int g = 0; g < G.order(); ++g)
                        if (G.subgroup_generated({g}) == mask) agg += artin_symbol_count(cover, g, n);
                    CHECK(agg == decomposition_count(cover, mask, n));
                }
            }
        }
    }
}

TEST_CASE("artin L of quadratic covers")
{
    const int K = 20;
    for (int q : {2, 3}) {
        CurveCounts base = CurveCounts::p1(q);
        GCover cover = GCover::constant_field(base, 2);
        GroupPtr G = cover.group();

        CHECK(artin_L(cover, MatrixRep::trivial(G), K) == zeta_hw(base, K));

        QS sign_expected = series_inv(from_poly({1, 1}, K)) * series_inv(from_poly({1, q}, K));
        CHECK(artin_L(cover, MatrixRep::sign_cyclic(G), K) == sign_expected);

        // the regular rep recovers the zeta of D = P^1 over F_{q^2},
        // Z(D,t) = 1/((1-t^2)(1-q^2 t^2))
        QS zd = series_inv(from_poly({1, 0, -1}, K)) *
                series_inv(from_poly({1, 0, -Rat(q) * q}, K));
        CHECK(artin_L(cover, MatrixRep::regular(G), K) == zd);
    }
    for (int q : {2, 3})
        for (long a : {0L, -1L, 1L}) {
            CurveCounts base = CurveCounts::elliptic(a, q);
            GCover cover = GCover::constant_field(base, 2);
            CHECK(artin_L(cover, MatrixRep::sign_cyclic(cover.group()), K) ==
                  sign_L_elliptic(a, q, K));
            // factorization Z(D,t) = L(triv) L(sign) with a_2 = a^2 - 2q
            CurveCounts d = base.base_change(2);
            QS zd(K, Rat(0));
            {
                QS logz(K, Rat(0));
                for (int m = 1; 2 * m <= K; ++m) logz[2 * m] = Rat(d.count(m)) / m;
                zd = series_exp(logz);  // Z(D, t) in the degree-over-k variable
            }
            CHECK(artin_L(cover, MatrixRep::trivial(cover.group()), K) *
                      artin_L(cover, MatrixRep::sign_cyclic(cover.group()), K) ==
                  zd);
        }
}

TEST_CASE("normalized polynomiality")
{
    // det(1 - rho(g_F) t) det(1 - q rho(g_F) t) L(cov, rho, t) is a polynomial
    // of degree at most b1 dim(rho)
    const int K = 25;
    for (int q : {2, 3})
        for (long a : {0L, -1L, 1L}) {
            CurveCounts base = CurveCounts::elliptic(a, q);
            GCover cover = GCover::constant_field(base, 2);
            GroupPtr G = cover.group();
            int frob = G->frobenius_or_throw();
            std::vector<MatrixRep> reps{MatrixRep::trivial(G), MatrixRep::sign_cyclic(G),
                                        MatrixRep::regular(G)};
            for (const MatrixRep& rho : reps) {
                QMatrix m = rho.matrix(frob);
                std::vector<Rat> p_plain = reversed_char_poly(m);
                std::vector<Rat> p_twist = reversed_char_poly(m.scaled(q));
                QS normalizer = from_poly(p_plain, K) * from_poly(p_twist, K);
                QS prod = normalizer * artin_L(cover, rho, K);
                int bound = base.b1() * rho.dim();
                for (int i = bound + 1; i <= K; ++i) CHECK(prod[i] == 0);
            }
        }
}

TEST_CASE("zero-dimensional covers")
{
    GroupPtr G = FiniteGroup::cyclic(2);
    // Spec(F_{q^2}) -> Spec(F_q): one closed point, decomposition G
    GCover cover = GCover::zero_dim(3, G, {{1, G->subgroup_generated({1}), 1}});
    const int K = 8;
    QS l_triv = artin_L(cover, MatrixRep::trivial(G), K);
    CHECK(l_triv == series_inv(from_poly({1, -1}, K)));
    QS l_sign = artin_L(cover, MatrixRep::sign_cyclic(G), K);
    CHECK(l_sign == series_inv(from_poly({1, 1}, K)));
    // no decompositions beyond the listed degrees
    for (long n = 2; n <= 10; ++n) CHECK(cover.decompositions(n).empty());
}

TEST_CASE("compatibility suite")
{
    for (int r = 2; r <= 6; ++r) {
        CompatReport rep = compat_suite(CurveCounts::p1(2), r, 10);
        for (const auto& item : rep.items) {
            INFO(item.name);
            CHECK(item.pass);
        }
    }
    CompatReport rep = compat_suite(CurveCounts::elliptic(-1, 2), 4, 10);
    CHECK(rep.all_pass());
}
