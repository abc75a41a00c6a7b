#include "motivol/rep.hpp"

#include <algorithm>
#include <map>

namespace motivol {

QMatrix QMatrix::identity(int n)
{
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::operator+(const QMatrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_) throw error("QMatrix: shape mismatch in +");
    QMatrix out = *this;
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] += o.a_[i];
    return out;
}

QMatrix QMatrix::operator*(const QMatrix& o) const
{
    if (cols_ != o.rows_) throw error("QMatrix: shape mismatch in *");
    QMatrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols_; ++j) out.at(i, j) += v * o.at(k, j);
        }
    return out;
}

QMatrix QMatrix::scaled(const Rat& c) const
{
    QMatrix out = *this;
    for (auto& x : out.a_) x *= c;
    return out;
}

Rat QMatrix::trace() const
{
    if (rows_ != cols_) throw error("QMatrix: trace of non-square matrix");
    Rat t = 0;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

namespace {

// row echelon reduction in place; returns pivot columns
std::vector<int> rref(QMatrix& m)
{
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m.at(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        Rat inv = 1 / m.at(r, c);
        for (int j = 0; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rat f = m.at(i, c);
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

QMatrix column_space_basis(const QMatrix& m)
{
    QMatrix work = m;
    std::vector<int> pivots = rref(work);
    QMatrix basis(m.rows(), static_cast<int>(pivots.size()));
    for (int j = 0; j < static_cast<int>(pivots.size()); ++j)
        for (int i = 0; i < m.rows(); ++i) basis.at(i, j) = m.at(i, pivots[static_cast<size_t>(j)]);
    return basis;
}

QMatrix solve_in_basis(const QMatrix& basis, const QMatrix& image)
{
    if (basis.rows() != image.rows()) throw error("solve_in_basis: shape mismatch");
    int r = basis.cols();
    QMatrix aug(basis.rows(), r + image.cols());
    for (int i = 0; i < basis.rows(); ++i) {
        for (int j = 0; j < r; ++j) aug.at(i, j) = basis.at(i, j);
        for (int j = 0; j < image.cols(); ++j) aug.at(i, r + j) = image.at(i, j);
    }
    std::vector<int> pivots = rref(aug);
    for (int k = 0; k < static_cast<int>(pivots.size()); ++k)
        if (pivots[static_cast<size_t>(k)] >= r)
            throw error("solve_in_basis: image not contained in span of basis");
    if (static_cast<int>(pivots.size()) != r) throw error("solve_in_basis: basis columns dependent");
    QMatrix x(r, image.cols());
    for (int k = 0; k < r; ++k)
        for (int j = 0; j < image.cols(); ++j) x.at(k, j) = aug.at(k, r + j);
    return x;
}

std::vector<Rat> reversed_char_poly(const QMatrix& m)
{
    if (m.rows() != m.cols()) throw error("reversed_char_poly: matrix not square");
    int d = m.rows();
    // power traces, then Newton's recurrence for the elementary symmetric
    // functions: det(I - tM) = sum (-1)^j e_j t^j
    std::vector<Rat> p(static_cast<size_t>(d) + 1, Rat(0));
    QMatrix pw = m;
    for (int k = 1; k <= d; ++k) {
        p[static_cast<size_t>(k)] = pw.trace();
        if (k < d) pw = pw * m;
    }
    std::vector<Rat> e(static_cast<size_t>(d) + 1, Rat(0));
    e[0] = 1;
    for (int j = 1; j <= d; ++j) {
        Rat acc = 0;
        for (int i = 1; i <= j; ++i) {
            Rat t = e[static_cast<size_t>(j - i)] * p[static_cast<size_t>(i)];
            acc += (i % 2 == 1) ? t : -t;
        }
        e[static_cast<size_t>(j)] = acc / j;
    }
    std::vector<Rat> out(static_cast<size_t>(d) + 1);
    for (int j = 0; j <= d; ++j) out[static_cast<size_t>(j)] = (j % 2 == 0) ? e[static_cast<size_t>(j)] : -e[static_cast<size_t>(j)];
    return out;
}

MatrixRep::MatrixRep(GroupPtr group, std::vector<QMatrix> per_element)
    : group_(std::move(group)), mats_(std::move(per_element))
{
    if (!group_) throw error("MatrixRep: null group");
    if (static_cast<int>(mats_.size()) != group_->order())
        throw error("MatrixRep: one matrix per element required");
    dim_ = mats_[0].rows();
    for (const auto& m : mats_)
        if (m.rows() != dim_ || m.cols() != dim_) throw error("MatrixRep: inconsistent dimensions");
    verify();
}

void MatrixRep::verify() const
{
    const FiniteGroup& G = *group_;
    if (!(mats_[static_cast<size_t>(G.identity())] == QMatrix::identity(dim_)))
        throw error("MatrixRep: identity does not map to the identity matrix");
    for (int a = 0; a < G.order(); ++a)
        for (int b = 0; b < G.order(); ++b)
            if (!(matrix(a) * matrix(b) == matrix(G.mul(a, b))))
                throw error("MatrixRep: not a homomorphism");
}

MatrixRep MatrixRep::trivial(GroupPtr group, int dim)
{
    std::vector<QMatrix> m(static_cast<size_t>(group->order()), QMatrix::identity(dim));
    return MatrixRep(std::move(group), std::move(m));
}

MatrixRep MatrixRep::regular(GroupPtr group)
{
    int n = group->order();
    std::vector<QMatrix> mats;
    mats.reserve(static_cast<size_t>(n));
    for (int g = 0; g < n; ++g) {
        QMatrix m(n, n);
        for (int x = 0; x < n; ++x) m.at(group->mul(g, x), x) = 1;
        mats.push_back(std::move(m));
    }
    return MatrixRep(std::move(group), std::move(mats));
}

MatrixRep MatrixRep::from_generators(GroupPtr group, const std::vector<int>& gen_elements,
                                     const std::vector<QMatrix>& gen_matrices)
{
    if (gen_elements.size() != gen_matrices.size())
        throw error("MatrixRep::from_generators: generator count mismatch");
    if (gen_matrices.empty()) throw error("MatrixRep::from_generators: no generators");
    int d = gen_matrices[0].rows();
    const FiniteGroup& G = *group;
    std::vector<QMatrix> mats(static_cast<size_t>(G.order()));
    std::vector<bool> known(static_cast<size_t>(G.order()), false);
    mats[static_cast<size_t>(G.identity())] = QMatrix::identity(d);
    known[static_cast<size_t>(G.identity())] = true;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int x = 0; x < G.order(); ++x) {
            if (!known[static_cast<size_t>(x)]) continue;
            for (size_t k = 0; k < gen_elements.size(); ++k) {
                int y = G.mul(x, gen_elements[k]);
                QMatrix m = mats[static_cast<size_t>(x)] * gen_matrices[k];
                if (!known[static_cast<size_t>(y)]) {
                    mats[static_cast<size_t>(y)] = std::move(m);
                    known[static_cast<size_t>(y)] = true;
                    grew = true;
                } else if (!(mats[static_cast<size_t>(y)] == m)) {
                    throw error("MatrixRep::from_generators: inconsistent word map");
                }
            }
        }
    }
    for (bool k : known)
        if (!k) throw error("MatrixRep::from_generators: generators do not generate the group");
    return MatrixRep(std::move(group), std::move(mats));
}

MatrixRep MatrixRep::coset_permutation(GroupPtr group, std::uint64_t subgroup_mask)
{
    const FiniteGroup& G = *group;
    if (!G.is_subgroup(subgroup_mask)) throw error("coset_permutation: not a subgroup");
    std::vector<int> coset_of(static_cast<size_t>(G.order()), -1);
    int ncosets = 0;
    for (int g = 0; g < G.order(); ++g) {
        if (coset_of[static_cast<size_t>(g)] >= 0) continue;
        for (int h : G.elements_of(subgroup_mask)) coset_of[static_cast<size_t>(G.mul(g, h))] = ncosets;
        ++ncosets;
    }
    std::vector<QMatrix> mats;
    mats.reserve(static_cast<size_t>(G.order()));
    std::vector<int> rep(static_cast<size_t>(ncosets), -1);
    for (int g = 0; g < G.order(); ++g)
        if (rep[static_cast<size_t>(coset_of[static_cast<size_t>(g)])] < 0)
            rep[static_cast<size_t>(coset_of[static_cast<size_t>(g)])] = g;
    for (int g = 0; g < G.order(); ++g) {
        QMatrix m(ncosets, ncosets);
        for (int c = 0; c < ncosets; ++c)
            m.at(coset_of[static_cast<size_t>(G.mul(g, rep[static_cast<size_t>(c)]))], c) = 1;
        mats.push_back(std::move(m));
    }
    return MatrixRep(std::move(group), std::move(mats));
}

MatrixRep MatrixRep::sign_cyclic(GroupPtr group)
{
    const FiniteGroup& G = *group;
    int n = G.order();
    if (n % 2 != 0) throw error("sign_cyclic: group order must be even");
    int gen = -1;
    for (int g = 0; g < n; ++g)
        if (G.element_order(g) == n) {
            gen = g;
            break;
        }
    if (gen < 0) throw error("sign_cyclic: group is not cyclic");
    std::vector<QMatrix> mats(static_cast<size_t>(n));
    for (int k = 0, x = G.identity(); k < n; ++k, x = G.mul(x, gen)) {
        QMatrix m(1, 1);
        m.at(0, 0) = (k % 2 == 0) ? 1 : -1;
        mats[static_cast<size_t>(x)] = m;
    }
    return MatrixRep(std::move(group), std::move(mats));
}

MatrixRep MatrixRep::direct_sum(const MatrixRep& a, const MatrixRep& b)
{
    if (a.group() != b.group()) throw error("direct_sum: group mismatch");
    int d = a.dim() + b.dim();
    std::vector<QMatrix> mats;
    mats.reserve(static_cast<size_t>(a.group()->order()));
    for (int g = 0; g < a.group()->order(); ++g) {
        QMatrix m(d, d);
        for (int i = 0; i < a.dim(); ++i)
            for (int j = 0; j < a.dim(); ++j) m.at(i, j) = a.matrix(g).at(i, j);
        for (int i = 0; i < b.dim(); ++i)
            for (int j = 0; j < b.dim(); ++j) m.at(a.dim() + i, a.dim() + j) = b.matrix(g).at(i, j);
        mats.push_back(std::move(m));
    }
    return MatrixRep(a.group(), std::move(mats));
}

MatrixRep MatrixRep::induced(GroupPtr group, const FiniteGroup::SubgroupView& H, const MatrixRep& rho_H)
{
    const FiniteGroup& G = *group;
    if (rho_H.group() != H.group) throw error("induced: representation not over the subgroup view");
    // coset representatives t_1..t_k of G/H
    std::uint64_t mask = 0;
    for (int x : H.embed) mask |= std::uint64_t{1} << x;
    std::vector<int> local(static_cast<size_t>(G.order()), -1);
    for (size_t i = 0; i < H.embed.size(); ++i) local[static_cast<size_t>(H.embed[i])] = static_cast<int>(i);
    std::vector<int> reps;
    std::vector<int> coset_of(static_cast<size_t>(G.order()), -1);
    for (int g = 0; g < G.order(); ++g) {
        if (coset_of[static_cast<size_t>(g)] >= 0) continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(g);
        for (int h : H.embed) coset_of[static_cast<size_t>(G.mul(g, h))] = c;
    }
    int k = static_cast<int>(reps.size());
    int d = rho_H.dim();
    std::vector<QMatrix> mats;
    mats.reserve(static_cast<size_t>(G.order()));
    for (int g = 0; g < G.order(); ++g) {
        QMatrix m(k * d, k * d);
        for (int j = 0; j < k; ++j) {
            int gj = G.mul(g, reps[static_cast<size_t>(j)]);
            int i = coset_of[static_cast<size_t>(gj)];
            int h = G.mul(G.inverse(reps[static_cast<size_t>(i)]), gj);
            int hl = local[static_cast<size_t>(h)];
            if (hl < 0) throw error("induced: coset decomposition failed");
            const QMatrix& block = rho_H.matrix(hl);
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < d; ++c) m.at(i * d + r, j * d + c) = block.at(r, c);
        }
        mats.push_back(std::move(m));
    }
    return MatrixRep(std::move(group), std::move(mats));
}

MatrixRep MatrixRep::restricted(const MatrixRep& rho, const FiniteGroup::SubgroupView& H)
{
    std::vector<QMatrix> mats;
    mats.reserve(H.embed.size());
    for (int x : H.embed) mats.push_back(rho.matrix(x));
    return MatrixRep(H.group, std::move(mats));
}

MatrixRep MatrixRep::pullback(const MatrixRep& rho_quotient, GroupPtr group,
                              const std::vector<int>& projection)
{
    if (static_cast<int>(projection.size()) != group->order())
        throw error("pullback: projection size mismatch");
    std::vector<QMatrix> mats;
    mats.reserve(projection.size());
    for (int g = 0; g < group->order(); ++g)
        mats.push_back(rho_quotient.matrix(projection[static_cast<size_t>(g)]));
    return MatrixRep(std::move(group), std::move(mats));
}

ClassFunction MatrixRep::character() const
{
    std::vector<Rat> v(static_cast<size_t>(group_->class_count()));
    for (int c = 0; c < group_->class_count(); ++c)
        v[static_cast<size_t>(c)] = matrix(group_->class_representative(c)).trace();
    return ClassFunction(group_, std::move(v));
}

std::vector<Rat> char_poly_P(const MatrixRep& rho, std::uint64_t inertia_mask,
                             std::uint64_t decomposition_mask)
{
    const FiniteGroup& G = *rho.group();
    if (!G.is_subgroup(inertia_mask)) throw error("char_poly_P: I is not a subgroup");
    if (!G.is_subgroup(decomposition_mask)) throw error("char_poly_P: D is not a subgroup");
    if ((inertia_mask & decomposition_mask) != inertia_mask)
        throw error("char_poly_P: I not contained in D");
    if (!G.is_normal_in(inertia_mask, decomposition_mask))
        throw error("char_poly_P: I is not normal in D");
    std::uint64_t nrm = G.normalizer(inertia_mask);
    if ((decomposition_mask & nrm) != decomposition_mask)
        throw error("char_poly_P: D not contained in the normalizer of I");

    // cosets of I in D and the valid generators g (image generates D/I)
    std::vector<int> I = G.elements_of(inertia_mask);
    std::vector<int> D = G.elements_of(decomposition_mask);
    int quotient_order = static_cast<int>(D.size() / I.size());
    auto coset_order = [&](int g) {
        // order of gI in D/I
        int k = 1;
        int x = g;
        while (!(inertia_mask & (std::uint64_t{1} << x))) {
            x = G.mul(x, g);
            ++k;
        }
        return k;
    };
    std::vector<int> generators;
    for (int g : D)
        if (coset_order(g) == quotient_order) generators.push_back(g);
    if (generators.empty()) throw error("char_poly_P: D/I is not cyclic");

    // projector onto V^I and an exact basis of its image
    QMatrix p(rho.dim(), rho.dim());
    for (int i : I) p = p + rho.matrix(i);
    p = p.scaled(Rat(1, static_cast<long>(I.size())));
    QMatrix basis = column_space_basis(p);

    std::vector<Rat> poly;
    for (int g : generators) {
        QMatrix image = rho.matrix(g) * basis;
        QMatrix m = solve_in_basis(basis, image);
        std::vector<Rat> candidate = reversed_char_poly(m);
        if (poly.empty())
            poly = std::move(candidate);
        else if (poly != candidate)
            throw error("char_poly_P: polynomial depends on the choice of generator");
    }
    return poly;
}

std::vector<Rat> char_poly_from_character(const ClassFunction& chi, std::uint64_t cyclic_mask, int dim)
{
    const FiniteGroup& G = *chi.group();
    int gen = -1;
    for (int g : G.elements_of(cyclic_mask))
        if (G.subgroup_generated({g}) == cyclic_mask) {
            gen = g;
            break;
        }
    if (gen < 0) throw error("char_poly_from_character: subgroup is not cyclic");
    // det(1 - t rho(g)) = sum_j (-1)^j (Lambda^j chi)(g) t^j
    std::vector<Rat> out(static_cast<size_t>(dim) + 1);
    for (int j = 0; j <= dim; ++j) {
        Rat v = exterior_char(chi, j, dim).at_element(gen);
        out[static_cast<size_t>(j)] = (j % 2 == 0) ? v : -v;
    }
    return out;
}

}  // namespace motivol
