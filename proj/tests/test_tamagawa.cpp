#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "motivol/artin_l.hpp"
#include "motivol/specialize.hpp"
#include "support/gf.hpp"

using namespace motivol;

namespace {

struct Setup {
    std::shared_ptr<TagRegistry> registry = std::make_shared<TagRegistry>();
    GroupPtr triv = FiniteGroup::trivial();
    GroupPtr z2 = FiniteGroup::cyclic(2);

    CohProfile p2() const { return CohProfile::projective_space(triv, registry, 2); }
    CohProfile p1() const { return CohProfile::p1(triv, registry); }
    CohProfile quadric() const { return CohProfile::quadric_swap(z2, registry); }

    ClassFunction pic_trivial(int rank = 1) const { return ClassFunction::constant(triv, rank); }
    ClassFunction pic_regular() const { return ClassFunction(z2, {Rat(2), Rat(0)}); }
};

Rat closed_form_p2xp1(const Rat& q)
{
    return q * q * (1 - pow_rat(q, -2)) * (1 - pow_rat(q, -3));
}

Rat rat_abs(const Rat& x) { return x < 0 ? -x : x; }

}  // namespace

TEST_CASE("term_P for P^2 over the trivial group")
{
    Setup s;
    for (int n = 1; n <= 6; ++n) {
        CohTail term = term_P(s.p2(), s.pic_trivial(), n, -8 * n);
        // (1 - l^-n u^-2n)(1 + l^-n u^-2n + l^-2n u^-4n) = 1 - l^-3n u^-6n
        CohTail expected = CohTail::one(-8 * n, CohClass::zero(s.triv, s.registry));
        expected.set(-6 * n, CohClass::lefschetz(s.triv, s.registry, -3 * n).scaled(-1));
        CHECK(term == expected);
        auto dev_deg = (term - CohTail::one(-8 * n, term.model())).degree();
        REQUIRE(dev_deg.has_value());
        CHECK(*dev_deg == -6 * n);
        CHECK(*dev_deg <= -3 * n);
    }
}

TEST_CASE("term_P for the twisted quadric")
{
    Setup s;
    CohProfile x = s.quadric();
    ClassFunction pic = s.pic_regular();
    for (int n : {1, 3, 5}) {
        CohTail term = term_P(x, pic, n, -10 * n);
        // at the swap class the factor is (1 - x^2)(1 + x^2) = 1 - x^4 with
        // x = l^-n u^-2n; the identity class carries (1 - x^2)^2
        CohClass c4 = term.coefficient(-4 * n);
        CohClass c8 = term.coefficient(-8 * n);
        ClassFunction v4 = c4.terms().begin()->second;
        CHECK(v4.at_element(1) == 0);
        CHECK(v4.at_element(0) == -2);
        ClassFunction v8 = c8.terms().begin()->second;
        CHECK(v8.at_element(1) == -1);
        CHECK(v8.at_element(0) == 1);
        auto dev = (term - CohTail::one(term.floor(), term.model())).degree();
        REQUIRE(dev.has_value());
        CHECK(*dev == -4 * n);
    }
    // hypothesis violations are rejected
    CHECK_THROWS_AS((void)term_P(s.p1(), s.pic_trivial(2), 1, -10), const error&);
    std::shared_ptr<TagRegistry> reg2 = std::make_shared<TagRegistry>();
    CohProfile ell = CohProfile::genus1_curve(s.triv, reg2, Rat(0), Rat(2));
    CHECK_THROWS_AS((void)term_P(ell, ClassFunction::constant(s.triv, 1), 1, -10), const error&);
}

TEST_CASE("motivic volume of P^2 x P^1")
{
    Setup s;
    MotivicVolume v = motivic_volume(s.p2(), s.pic_trivial(), s.p1(), 1, 24);
    CHECK(v.leading_exponent == 4);
    CHECK(v.series.coefficient(4) == CohClass::lefschetz(s.triv, s.registry, 2));
    for (const TermCertificate& c : v.certificates) CHECK(c.pass);

    // truncation independence: a deeper window leaves retained coefficients
    MotivicVolume deeper = motivic_volume(s.p2(), s.pic_trivial(), s.p1(), 1, 34);
    for (const auto& [e, cls] : v.series.terms()) CHECK(deeper.series.coefficient(e) == cls);

    for (int q : {2, 3, 5}) {
        VolumeReport r = specialize(v, 1, q);
        Rat target = closed_form_p2xp1(q);
        CHECK(rat_abs(r.value - target) < pow_rat(Rat(q), -20));
        CHECK(rat_abs(r.value - target) <= r.tail_bound);
    }
    // genus >= 2 base curves are rejected
    CohProfile fake = CohProfile(s.triv, s.registry, 1,
                                 std::map<int, CohClass>{{0, CohClass::one(s.triv, s.registry)}}, 2);
    CHECK_THROWS_AS((void)motivic_volume(s.p2(), s.pic_trivial(), fake, 1, 8), const error&);
}

TEST_CASE("classical volume closed forms")
{
    // X = P^2, C = P^1: q^2 (1 - q^-2)(1 - q^-3); 21/8 at q = 2
    for (int q : {2, 3, 5}) {
        VolumeReport r = classical_volume(FiberCounts::p2(q), CurveCounts::p1(q),
                                          1, MatrixRep::trivial(FiniteGroup::trivial()), 40, 40);
        Rat target = closed_form_p2xp1(q);
        CHECK(rat_abs(r.value - target) <= r.tail_bound);
        CHECK(rat_abs(r.value - target) < pow_rat(Rat(q), -25));
        if (q == 2) CHECK(rat_abs(r.value - Rat(21, 8)) < Rat(1, BigInt(1) << 25));
        // per-n factor structure: A_n = 1 - q^-3n for P^2 / trivial group
        for (const VolumeEntry& e : r.entries)
            CHECK(e.base == 1 - pow_rat(Rat(q), -3 * e.depth));
    }
    // X = P^1: factor 1 - q^-2n, so the product is q Z_{P^1}(q^-2)^{-1}
    // = q (1 - q^-1)(1 - q^-2); 16/9 at q = 3
    Rat target_p1 = Rat(3) * (1 - Rat(1, 3)) * (1 - Rat(1, 9));
    CHECK(target_p1 == Rat(16, 9));
    VolumeReport r = classical_volume(FiberCounts::p1(3), CurveCounts::p1(3), 1,
                                      MatrixRep::trivial(FiniteGroup::trivial()), 40, 40);
    CHECK(rat_abs(r.value - target_p1) <= r.tail_bound);
    CHECK(rat_abs(r.value - target_p1) < pow_rat(Rat(3), -25));
}

TEST_CASE("classical volume of the twisted quadric, brute-forced counts")
{
    for (int q : {2, 3}) {
        // closed-form counts cross-checked against the Weil-restriction oracle
        FiberCounts closed = FiberCounts::quadric_swap(q);
        std::vector<BigInt> counted;
        for (int n = 1; n <= 4; ++n) {
            counted.push_back(testsupport::count_twisted_quadric(q, n));
            CHECK(counted.back() == closed.counts(n));
        }
        GroupPtr z2 = FiniteGroup::cyclic(2);
        VolumeReport r = classical_volume(closed, CurveCounts::p1(q), 2,
                                          MatrixRep::regular(z2), 12, 30);
        // per-n factor: 1 - q^-4n for odd n, (1 - q^-2n)^2 for even n
        for (const VolumeEntry& e : r.entries) {
            Rat qn = pow_rat(Rat(q), -2 * e.depth);
            Rat expected = (e.depth % 2 == 1) ? (1 - qn * qn) : (1 - qn) * (1 - qn);
            CHECK(e.base == expected);
        }
    }
}

TEST_CASE("per-term bridge identity")
{
    Setup s;
    // trace of the exact motivic term at u = -1 matches the classical factor
    // base; the psi trace matches the closed-point count
    MotivicVolume v = motivic_volume(s.p2(), s.pic_trivial(), s.p1(), 1, 16);
    for (int q : {2, 3, 5}) {
        VolumeReport cl = classical_volume(FiberCounts::p2(q), CurveCounts::p1(q), 1,
                                           MatrixRep::trivial(FiniteGroup::trivial()), 15, 40);
        for (int n = 1; n <= 15; ++n) {
            CHECK(bridge_term_base(v, n, 1, q) == cl.entries[static_cast<size_t>(n - 1)].base);
            CHECK(bridge_term_exponent(v, n, 1, q) ==
                  cl.entries[static_cast<size_t>(n - 1)].exponent);
        }
    }

    MotivicVolume vq = motivic_volume(s.quadric(), s.pic_regular(),
                                      s.p1().lifted_to(s.z2), 2, 16);
    for (int q : {2, 3}) {
        VolumeReport cl = classical_volume(FiberCounts::quadric_swap(q), CurveCounts::p1(q), 2,
                                           MatrixRep::regular(s.z2), 15, 40);
        for (int n = 1; n <= 15; ++n) {
            CHECK(bridge_term_base(vq, n, 1, q) == cl.entries[static_cast<size_t>(n - 1)].base);
            CHECK(bridge_term_exponent(vq, n, 1, q) ==
                  cl.entries[static_cast<size_t>(n - 1)].exponent);
        }
        // m = 2 kills the twist: compare against the split quadric over F_{q^2}
        GroupPtr sub = FiniteGroup::cyclic(1);
        VolumeReport cl2 = classical_volume(FiberCounts::split_quadric(Rat(q) * q),
                                            CurveCounts::p1(Rat(q) * q), 1,
                                            MatrixRep::trivial(sub, 2), 15, 40);
        for (int n = 1; n <= 15; ++n)
            CHECK(bridge_term_base(vq, n, 2, q) == cl2.entries[static_cast<size_t>(n - 1)].base);
    }
}

TEST_CASE("specialization of the twisted quadric")
{
    Setup s;
    MotivicVolume v = motivic_volume(s.quadric(), s.pic_regular(), s.p1().lifted_to(s.z2), 2, 24);
    for (int q : {2, 3}) {
        VolumeReport mot = specialize(v, 1, q);
        VolumeReport cl = classical_volume(FiberCounts::quadric_swap(q), CurveCounts::p1(q), 2,
                                           MatrixRep::regular(s.z2), 24, 48);
        CHECK(rat_abs(mot.value - cl.value) < pow_rat(Rat(q), -18));

        VolumeReport mot2 = specialize(v, 2, q);
        VolumeReport cl2 = classical_volume(FiberCounts::split_quadric(Rat(q) * q),
                                            CurveCounts::p1(Rat(q) * q), 1,
                                            MatrixRep::trivial(FiniteGroup::trivial(), 2), 24, 48);
        CHECK(rat_abs(mot2.value - cl2.value) < pow_rat(Rat(q), -30));
    }
}

TEST_CASE("degree certificates across the built-ins")
{
    Setup s;
    auto reg = s.registry;
    std::vector<std::tuple<CohProfile, ClassFunction, CohProfile>> cases;
    cases.emplace_back(s.p2(), s.pic_trivial(), s.p1());
    cases.emplace_back(CohProfile::kunneth_product(s.p1(), s.p1()), s.pic_trivial(2), s.p1());
    cases.emplace_back(s.quadric(), s.pic_regular(), s.p1().lifted_to(s.z2));
    cases.emplace_back(s.p2(), s.pic_trivial(),
                       CohProfile::genus1_curve(s.triv, reg, Rat(-1), Rat(2)));
    for (auto& [x, pic, c] : cases) {
        MotivicVolume v = motivic_volume(x, pic, c, x.group()->order(), 10);
        DegreeCertReport rep = degree_certificate(v, 20);
        CHECK(rep.pass);
        for (const TermCertificate& t : rep.terms) {
            CHECK(t.term_degree <= -3 * t.n);
            CHECK(t.psi_degree <= 2 * t.n);
            if (*c.genus() == 1) CHECK(t.psi_degree == 2 * t.n);
        }
    }
}

TEST_CASE("genus-1 base curve volume")
{
    Setup s;
    auto reg = s.registry;
    CohProfile e = CohProfile::genus1_curve(s.triv, reg, Rat(-1), Rat(2));
    MotivicVolume v = motivic_volume(s.p2(), s.pic_trivial(), e, 1, 40);
    CHECK(v.leading_exponent == 0);
    CHECK(v.series.coefficient(0) == CohClass::one(s.triv, s.registry));

    // classical comparison over F_2 with the elliptic base
    VolumeReport mot = specialize(v, 1, 2);
    VolumeReport cl = classical_volume(FiberCounts::p2(2), CurveCounts::elliptic(-1, 2), 1,
                                       MatrixRep::trivial(s.triv), 40, 80);
    CHECK(rat_abs(mot.value - cl.value) < pow_rat(Rat(2), -15));
    for (int n = 1; n <= 10; ++n) {
        CHECK(bridge_term_base(v, n, 1, 2) == cl.entries[static_cast<size_t>(n - 1)].base);
        CHECK(bridge_term_exponent(v, n, 1, 2) == cl.entries[static_cast<size_t>(n - 1)].exponent);
    }
}

TEST_CASE("specialize warns when the m-condition fails")
{
    Setup s;
    MotivicVolume v = motivic_volume(s.quadric(), s.pic_regular(), s.p1().lifted_to(s.z2), 2, 8);
    // b = 2: the condition m > (1/2) log_q 3 already holds at m = 1 for q >= 2
    VolumeReport r = specialize(v, 1, 2);
    CHECK(r.warnings.empty());
}
