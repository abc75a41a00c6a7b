#include "motivol/tamagawa.hpp"

#include "motivol/eta.hpp"

#include <atomic>
#include <thread>

namespace motivol {

namespace {

void check_hypotheses(const CohProfile& x, const ClassFunction& pic)
{
    if (x.betti(1) != 0) throw error("profile violates hyp:X: b1 is nonzero");
    if (pic.group() != x.group()) throw error("term_P: pic character over the wrong group");
    int top_pic_degree = 2 * x.dim() - 2;
    CohClass expected =
        CohClass::from_class_function(pic, x.registry(), x.dim() - 1);
    if (!(x.entry(top_pic_degree) == expected))
        throw error("profile violates hyp:X: H^(2 dim - 2) is not pic * l^(dim-1)");
    Rat d = pic.at_element(pic.group()->identity());
    if (!is_integer(d) || d < 1) throw error("term_P: pic character must have positive integral rank");
}

}  // namespace

CohTail term_P(const CohProfile& x, const ClassFunction& pic, int n, int floor)
{
    if (n < 1) throw error("term_P: n must be >= 1");
    check_hypotheses(x, pic);
    const GroupPtr& G = x.group();
    const TagRegistryPtr& reg = x.registry();
    CohClass zero = CohClass::zero(G, reg);
    int pic_dim = static_cast<int>(numerator(pic.at_element(G->identity())));

    // prod over Conjc(G) of P_{pic,{e},C}(l^-n u^-2n) ^ eta(C,n); the
    // polynomial coefficients are scalars (values of the exterior characters
    // at a generator of C), the exponents are theta-class sums
    CohTail acc = CohTail::one(floor, zero);
    for (int c = 0; c < G->cyclic_class_count(); ++c) {
        ClassFunction eta = eta_class(G, c, n);
        if (eta.is_zero()) continue;
        int gen = G->cyclic_class_generator(c);
        CohTail base = CohTail::one(floor, zero);
        for (int j = 1; j <= pic_dim; ++j) {
            Rat v = exterior_char(pic, j, pic_dim).at_element(gen);
            if (v == 0) continue;
            Rat coeff = (j % 2 == 0) ? v : -v;
            base.set(-2 * n * j,
                     base.coefficient(-2 * n * j) + CohClass::lefschetz(G, reg, -n * j).scaled(coeff));
        }
        CohClass exponent = CohClass::from_class_function(eta, reg);
        acc = acc * laurent_pow(base, exponent);
    }

    // phi_n(X) l^(-n dim) u^(-2n dim)
    CohTail phi = phi_n(x, n);
    CohClass shift = CohClass::lefschetz(G, reg, -n * x.dim());
    CohTail phi_shifted(floor, zero);
    for (const auto& [e, cls] : phi.terms()) phi_shifted.set(e - 2 * n * x.dim(), cls * shift);
    return acc * phi_shifted;
}

namespace {

TermCertificate certify(const CohProfile& x, const ClassFunction& pic, const CohProfile& c, int n)
{
    int probe_floor = -(3 * n + 2 * n * (x.dim() + x.max_betti()) + 4);
    CohTail term = term_P(x, pic, n, probe_floor);
    CohTail dev = term - CohTail::one(probe_floor, term.model());
    TermCertificate cert;
    cert.n = n;
    cert.bound = -3 * n;
    auto d = dev.degree();
    cert.term_degree = d ? *d : probe_floor;
    auto pd = psi_n(c, n).degree();
    cert.psi_degree = pd ? *pd : 0;
    cert.pass = cert.term_degree <= cert.bound && cert.psi_degree <= 2 * n;
    return cert;
}

}  // namespace

MotivicVolume motivic_volume(const CohProfile& x, const ClassFunction& pic, const CohProfile& c,
                             int extension_degree, int window, int threads)
{
    if (window < 1) throw error("motivic_volume: window must be >= 1");
    if (!c.genus()) throw error("motivic_volume: curve profile without a genus");
    int g = *c.genus();
    if (g != 0 && g != 1)
        throw error("motivic_volume: only genus 0 and 1 base curves are supported");
    CohProfile curve = c.group() == x.group() ? c : c.lifted_to(x.group());
    check_hypotheses(x, pic);

    const GroupPtr& G = x.group();
    const TagRegistryPtr& reg = x.registry();
    CohClass zero = CohClass::zero(G, reg);
    int leading = 2 * (1 - g) * x.dim();

    // per-term net degree is at most -n, so terms beyond the window cannot
    // reach the retained exponents
    int terms = window;
    std::vector<CohTail> factors(static_cast<size_t>(terms), CohTail(-window, zero));
    std::vector<TermCertificate> certs(static_cast<size_t>(terms));
    auto compute = [&](int n) {
        int work_floor = -window - 2 * n;
        CohTail term = term_P(x, pic, n, work_floor);
        CohTail psi = psi_n(curve, n).with_floor(work_floor);
        CohTail powed = laurent_pow(term, psi).with_floor(-window);
        factors[static_cast<size_t>(n - 1)] = powed;
        certs[static_cast<size_t>(n - 1)] = certify(x, pic, curve, n);
        if (!certs[static_cast<size_t>(n - 1)].pass)
            throw error("motivic_volume: degree-bound certificate failed at n=" + std::to_string(n));
    };
    if (threads <= 1) {
        for (int n = 1; n <= terms; ++n) compute(n);
    } else {
        std::atomic<int> next{1};
        auto worker = [&]() {
            for (int n = next.fetch_add(1); n <= terms; n = next.fetch_add(1)) compute(n);
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    CohTail acc = CohTail::one(-window, zero);
    for (const CohTail& f : factors) acc = acc * f;

    // leading factor l^((1-g) dim) u^(2 (1-g) dim)
    CohClass lead = CohClass::lefschetz(G, reg, (1 - g) * x.dim());
    CohTail series(leading - window, zero);
    for (const auto& [e, cls] : acc.terms()) series.set(e + leading, cls * lead);

    MotivicVolume v{std::move(series), leading, window,        x.dim(), g,
                    extension_degree,  x,       curve,         pic,     std::move(certs)};
    // leading-term invariant
    if (!(v.series.coefficient(leading) == lead))
        throw error("motivic_volume: leading coefficient is not l^((1-g) dim X)");
    return v;
}

DegreeCertReport degree_certificate(const MotivicVolume& v, int max_n)
{
    DegreeCertReport report;
    for (int n = 1; n <= max_n; ++n) {
        TermCertificate c = certify(v.x_profile, v.pic, v.c_profile, n);
        report.pass = report.pass && c.pass;
        report.terms.push_back(c);
    }
    return report;
}

}  // namespace motivol
