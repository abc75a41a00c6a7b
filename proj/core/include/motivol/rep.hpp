#ifndef MOTIVOL_REP_HPP
#define MOTIVOL_REP_HPP

#include "motivol/class_function.hpp"
#include "motivol/group.hpp"

#include <vector>

namespace motivol {

// Dense matrix over Q, just enough exact linear algebra for projectors,
// invariant subspaces and characteristic polynomials.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows * cols), Rat(0)) {}
    static QMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i * cols_ + j)]; }
    Rat& at(int i, int j) { return a_[static_cast<size_t>(i * cols_ + j)]; }

    bool operator==(const QMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    QMatrix operator+(const QMatrix& o) const;
    QMatrix operator*(const QMatrix& o) const;
    QMatrix scaled(const Rat& c) const;
    Rat trace() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

// columns spanning the column space of m (exact)
QMatrix column_space_basis(const QMatrix& m);

// coefficients of det(I - tM), index = degree; M square
std::vector<Rat> reversed_char_poly(const QMatrix& m);

// X with basis * X = image, where basis has full column rank
QMatrix solve_in_basis(const QMatrix& basis, const QMatrix& image);

// Rational matrix representation of a finite group, stored per element and
// verified as a homomorphism on construction.
class MatrixRep {
public:
    MatrixRep(GroupPtr group, std::vector<QMatrix> per_element);

    static MatrixRep trivial(GroupPtr group, int dim = 1);
    static MatrixRep regular(GroupPtr group);
    // extends generator images through the word map
    static MatrixRep from_generators(GroupPtr group, const std::vector<int>& gen_elements,
                                     const std::vector<QMatrix>& gen_matrices);
    // permutation representation on the cosets G/H
    static MatrixRep coset_permutation(GroupPtr group, std::uint64_t subgroup_mask);
    // order-2 character of an even-order cyclic group
    static MatrixRep sign_cyclic(GroupPtr group);
    static MatrixRep direct_sum(const MatrixRep& a, const MatrixRep& b);
    // Ind_H^G rho for rho a representation of the subgroup view H
    static MatrixRep induced(GroupPtr group, const FiniteGroup::SubgroupView& H, const MatrixRep& rho_H);
    // restriction along a subgroup view (rho_H(x) = rho(embed(x)))
    static MatrixRep restricted(const MatrixRep& rho, const FiniteGroup::SubgroupView& H);
    // pullback along a quotient projection (rho_G(g) = rho(pi(g)))
    static MatrixRep pullback(const MatrixRep& rho_quotient, GroupPtr group,
                              const std::vector<int>& projection);

    const GroupPtr& group() const { return group_; }
    int dim() const { return dim_; }
    const QMatrix& matrix(int g) const { return mats_.at(static_cast<size_t>(g)); }
    ClassFunction character() const;

private:
    void verify() const;

    GroupPtr group_;
    int dim_ = 0;
    std::vector<QMatrix> mats_;
};

// The characteristic polynomial P_{rho,I,D}(t) = det(Id - t rho(g) | V^I) for
// g in D mapping to a generator of the cyclic quotient D/I. Checked to be
// independent of the choice of g. Returns the coefficient list.
std::vector<Rat> char_poly_P(const MatrixRep& rho, std::uint64_t inertia_mask,
                             std::uint64_t decomposition_mask);

// Same polynomial computed from the character alone through exterior powers;
// C is a cyclic subgroup (inertia trivial). Independent of char_poly_P's
// projector route.
std::vector<Rat> char_poly_from_character(const ClassFunction& chi, std::uint64_t cyclic_mask,
                                          int dim);

}  // namespace motivol

#endif
